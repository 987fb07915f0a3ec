#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gauss_rat.hpp"
#include "scalar.hpp"

namespace qgeom {

/// Polynomial variable: either a state amplitude a[i1..im] (0-based
/// multi-index) or a Plücker coordinate P[i1,..,ik] (1-based increasing subset).
/// Ordered by kind, then lexicographically by index.
struct VarId {
  enum class Kind : std::uint8_t { State = 0, Pluecker = 1 };

  Kind kind = Kind::State;
  std::vector<std::uint32_t> index;

  static VarId state(std::vector<std::uint32_t> idx) { return {Kind::State, std::move(idx)}; }
  static VarId pluecker(std::vector<std::uint32_t> subset) {
    for (std::size_t i = 1; i < subset.size(); ++i)
      if (subset[i] <= subset[i - 1]) throw Error(Errc::IndexOutOfRange, "Plücker variable: subset must be increasing");
    return {Kind::Pluecker, std::move(subset)};
  }

  std::string str() const {
    std::string out = kind == Kind::State ? "a[" : "P[";
    bool wide = kind == Kind::Pluecker;
    for (auto i : index) wide = wide || i > 9;
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (wide && i > 0) out += ",";
      out += std::to_string(index[i]);
    }
    return out + "]";
  }

  friend bool operator==(const VarId&, const VarId&) = default;
  friend std::strong_ordering operator<=>(const VarId& a, const VarId& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.index <=> b.index;
  }
};

/// Product of variables with positive exponents, sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<VarId, unsigned>;

  Monomial() = default;
  explicit Monomial(VarId v, unsigned e = 1) {
    if (e > 0) factors_.emplace_back(std::move(v), e);
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        out.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        out.factors_.push_back(*j++);
      } else {
        out.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Lexicographic order on the variable sequence with exponents expanded
  /// (x^2 = x*x); a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    std::size_t i = 0, j = 0;
    unsigned ri = a.factors_.empty() ? 0 : a.factors_[0].second;
    unsigned rj = b.factors_.empty() ? 0 : b.factors_[0].second;
    while (i < a.factors_.size() && j < b.factors_.size()) {
      if (auto c = a.factors_[i].first <=> b.factors_[j].first; c != 0) return c;
      const unsigned step = std::min(ri, rj);
      ri -= step;
      rj -= step;
      if (ri == 0 && ++i < a.factors_.size()) ri = a.factors_[i].second;
      if (rj == 0 && ++j < b.factors_.size()) rj = b.factors_[j].second;
    }
    const bool a_done = i >= a.factors_.size();
    const bool b_done = j >= b.factors_.size();
    if (a_done && b_done) return std::strong_ordering::equal;
    return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::string str() const {
    std::string out;
    for (const auto& [v, e] : factors_) {
      if (!out.empty()) out += "*";
      out += v.str();
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::vector<Factor> factors_;
};

/// Result of a homogeneity check.
struct Grade {
  enum class Kind { Degree, NotHomogeneous, AnyDegree };
  Kind kind;
  unsigned degree = 0;

  bool homogeneous() const { return kind != Kind::NotHomogeneous; }
  friend bool operator==(const Grade&, const Grade&) = default;
};

/// Sparse polynomial over the Gaussian rationals. Terms are kept in canonical
/// monomial order and no zero coefficient is ever stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, GaussRat>;

  MultiPoly() = default;
  MultiPoly(const GaussRat& c) { add_term(Monomial{}, c); }  // NOLINT: constants convert implicitly
  explicit MultiPoly(VarId v) { terms_.emplace(Monomial(std::move(v)), GaussRat(1)); }
  MultiPoly(Monomial m, const GaussRat& c) { add_term(std::move(m), c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Total order on canonical forms (term by term), for deduplication.
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) {
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    for (; i != a.terms_.end() && j != b.terms_.end(); ++i, ++j) {
      if (auto c = i->first <=> j->first; c != 0) return c < 0;
      const auto& x = i->second;
      const auto& y = j->second;
      if (x.real() != y.real()) return x.real() < y.real();
      if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
    return i == a.terms_.end() && j != b.terms_.end();
  }

  /// Sign-canonical form: the first term in canonical order gets a positive
  /// leading part (real part if nonzero, otherwise imaginary part).
  MultiPoly sign_canonical() const {
    if (terms_.empty()) return *this;
    const GaussRat& lead = terms_.begin()->second;
    const int s = sgn(lead.real()) != 0 ? sgn(lead.real()) : sgn(lead.imag());
    return s < 0 ? -*this : *this;
  }

  std::optional<unsigned> max_degree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  /// One line: `coef*var^e*...` terms joined by " + " / " - ".
  std::string str() const;

 private:
  Terms terms_;
};

inline Grade is_homogeneous(const MultiPoly& p) {
  if (p.is_zero()) return {Grade::Kind::AnyDegree, 0};
  const unsigned d = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms())
    if (m.degree() != d) return {Grade::Kind::NotHomogeneous, 0};
  return {Grade::Kind::Degree, d};
}

inline MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
inline MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

inline std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool real = sgn(c.imag()) == 0;
    const bool imag = sgn(c.real()) == 0;
    bool negative = false;
    std::string coef;
    if (real || imag) {
      const Rational& part = real ? c.real() : c.imag();
      negative = sgn(part) < 0;
      const Rational mag = abs(part);
      if (imag)
        coef = (mag == 1 ? std::string() : mag.get_str() + "*") + "i";
      else if (mag != 1 || m.is_one())
        coef = mag.get_str();
    } else {
      coef = "(" + c.str() + ")";
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    out += coef;
    if (!m.is_one()) out += (coef.empty() ? "" : "*") + m.str();
  }
  return out;
}

/// Value of `p` with each variable replaced by `lookup(var)`. `lookup` returns
/// std::optional<V>; an empty result raises MissingVariable.
template <Scalar V, class Lookup>
V evaluate_with(const MultiPoly& p, Lookup&& lookup) {
  V acc{};
  for (const auto& [m, c] : p.terms()) {
    V term = scalar_from<V>(c);
    for (const auto& [var, e] : m.factors()) {
      std::optional<V> value = lookup(var);
      if (!value) throw Error(Errc::MissingVariable, "no value assigned to " + var.str());
      for (unsigned k = 0; k < e; ++k) term *= *value;
    }
    acc += term;
  }
  return acc;
}

template <Scalar V>
using Assignment = std::map<VarId, V>;

template <Scalar V>
V evaluate(const MultiPoly& p, const Assignment<V>& assignment) {
  return evaluate_with<V>(p, [&](const VarId& v) -> std::optional<V> {
    auto it = assignment.find(v);
    if (it == assignment.end()) return std::nullopt;
    return it->second;
  });
}

}  // namespace qgeom

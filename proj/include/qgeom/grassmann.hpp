#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "scalar.hpp"
#include "segre_ideal.hpp"
#include "state.hpp"

namespace qgeom {

inline constexpr std::uint64_t kDefaultMaxChoose = 10000;

/// Maximal minors P_I of a k x N matrix, I ranging over increasing k-subsets
/// of {1..N} in lexicographic order.
template <Scalar T>
class PlueckerSet {
 public:
  PlueckerSet(int k, int n, std::vector<T> coords) : k_(k), n_(n), coords_(std::move(coords)) {
    if (k < 1 || k > n) throw Error(Errc::ShapeError, "Plücker set: need 1 <= k <= N");
    if (coords_.size() != binomial(n, k))
      throw Error(Errc::DimensionMismatch, "Plücker set: expected C(N,k) coordinates");
  }

  int k() const { return k_; }
  int n() const { return n_; }
  std::span<const T> coords() const { return coords_; }
  std::vector<std::vector<int>> subsets() const { return k_subsets(n_, k_); }

  /// P for an arbitrary index list: sign of the sorting permutation times
  /// P_sorted, or 0 when an index repeats.
  T operator[](std::vector<int> idx) const {
    if (static_cast<int>(idx.size()) != k_) throw Error(Errc::IndexOutOfRange, "Plücker index has the wrong length");
    for (int i : idx)
      if (i < 1 || i > n_) throw Error(Errc::IndexOutOfRange, "Plücker index out of range");
    const int sign = sort_with_sign(idx);
    if (sign == 0) return T{};
    const T& v = coords_[subset_rank(idx, n_)];
    return sign > 0 ? v : -v;
  }

 private:
  int k_;
  int n_;
  std::vector<T> coords_;
};

namespace detail {

template <Scalar T>
PlueckerSet<T> maximal_minors(const Matrix<T>& m) {
  const int k = static_cast<int>(m.rows());
  const int n = static_cast<int>(m.cols());
  std::vector<T> coords;
  for (const auto& subset : k_subsets(n, k)) {
    Matrix<T> sub(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub(r, c) = m(r, subset[c] - 1);
    coords.push_back(determinant(std::move(sub)));
  }
  return PlueckerSet<T>(k, n, std::move(coords));
}

}  // namespace detail

template <Scalar T>
PlueckerSet<T> pluecker_coordinates(const Matrix<T>& m) {
  if (m.rows() < 1 || m.rows() >= m.cols())
    throw Error(Errc::ShapeError, "Plücker coordinates need a k x N matrix with 1 <= k < N");
  return detail::maximal_minors(m);
}

/// Which (I, J) index pairs feed the quadratic relations.
enum class RelationFamily {
  /// Every increasing (k-1)-sequence I and (k+1)-sequence J.
  AllPairs,
  /// Only pairs with i_{k-1} < j_1.
  Separated,
};

/// sum_{t=1}^{k+1} (-1)^t P[I, j_t] P[J without j_t], stored sign-canonical.
struct PlueckerRelation {
  MultiPoly poly;
  std::vector<int> I;
  std::vector<int> J;
};

namespace detail {

// Signed Plücker variable for an index sequence; zero polynomial on repeats.
inline MultiPoly pluecker_var(std::vector<int> idx) {
  const int sign = sort_with_sign(idx);
  if (sign == 0) return {};
  MultiPoly v(VarId::pluecker(std::vector<std::uint32_t>(idx.begin(), idx.end())));
  return sign > 0 ? v : -v;
}

}  // namespace detail

inline MultiPoly pluecker_relation_poly(std::span<const int> I, std::span<const int> J) {
  MultiPoly poly;
  for (std::size_t t = 0; t < J.size(); ++t) {
    std::vector<int> left(I.begin(), I.end());
    left.push_back(J[t]);
    std::vector<int> right;
    for (std::size_t u = 0; u < J.size(); ++u)
      if (u != t) right.push_back(J[u]);
    MultiPoly term = detail::pluecker_var(std::move(left)) * detail::pluecker_var(std::move(right));
    // t is 0-based here; the sign is (-1)^(t+1).
    if (t % 2 == 0)
      poly -= term;
    else
      poly += term;
  }
  return poly;
}

/// Quadratic relations among the Plücker coordinates of G(k, N). Identically
/// zero relations are dropped and the rest deduplicated up to sign; the
/// result is sorted by canonical polynomial order, each entry carrying the
/// first (I, J) that produced it.
inline std::vector<PlueckerRelation> pluecker_relations(int k, int n, std::uint64_t max_choose = kDefaultMaxChoose,
                                                       RelationFamily family = RelationFamily::AllPairs) {
  if (k < 1 || k >= n) throw Error(Errc::ShapeError, "Plücker relations need 1 <= k < N");
  if (binomial(n, k) > max_choose)
    throw Error(Errc::TooLarge, "C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds the cap of " +
                                    std::to_string(max_choose));
  std::map<MultiPoly, PlueckerRelation> unique;
  const auto js = k_subsets(n, k + 1);
  for (const auto& I : k_subsets(n, k - 1)) {
    for (const auto& J : js) {
      if (family == RelationFamily::Separated && !I.empty() && I.back() >= J.front()) continue;
      MultiPoly p = pluecker_relation_poly(I, J);
      if (p.is_zero()) continue;
      p = p.sign_canonical();
      if (!unique.count(p)) unique.emplace(p, PlueckerRelation{p, I, J});
    }
  }
  std::vector<PlueckerRelation> out;
  out.reserve(unique.size());
  for (auto& [p, rel] : unique) out.push_back(std::move(rel));
  return out;
}

/// Max |relation(coords)| over the given relations. Exact backends evaluate
/// exactly and report 0.0 only for an exact zero.
template <Scalar T>
double check_relations(const PlueckerSet<T>& ps, std::span<const PlueckerRelation> relations) {
  double worst = 0.0;
  for (const auto& rel : relations) {
    const T v = evaluate_with<T>(rel.poly, [&](const VarId& var) -> std::optional<T> {
      if (var.kind != VarId::Kind::Pluecker || var.index.size() != static_cast<std::size_t>(ps.k()))
        return std::nullopt;
      return ps[std::vector<int>(var.index.begin(), var.index.end())];
    });
    double mag;
    if constexpr (is_exact_v<T>) {
      mag = v.is_zero() ? 0.0 : std::max(std::sqrt(v.norm().get_d()), std::numeric_limits<double>::min());
    } else {
      mag = std::abs(v);
    }
    worst = std::max(worst, mag);
  }
  return worst;
}

template <Scalar T>
double check_relations(const PlueckerSet<T>& ps, RelationFamily family = RelationFamily::AllPairs) {
  if (ps.k() >= ps.n()) return 0.0;
  const auto rels = pluecker_relations(ps.k(), ps.n(), std::numeric_limits<std::uint64_t>::max(), family);
  return check_relations(ps, std::span<const PlueckerRelation>(rels));
}

/// Plücker measure of a multi-qubit state together with the coordinates it
/// was computed from.
template <Scalar T>
struct PlueckerMeasure {
  double value;
  int pivot;
  PlueckerSet<T> coords;
};

/// Flattens the state at {pivot} into a 2 x 2^(m-1) matrix, takes its
/// Plücker coordinates and returns 2 * sqrt(sum_I |P_I|^2), normalized to a
/// unit-norm state. For m = 2 the single coordinate is the determinant.
template <Scalar T>
PlueckerMeasure<T> pluecker_measure_detail(const PureState<T>& s, int pivot = 1) {
  if (s.modes() < 2) throw Error(Errc::WrongShape, "Plücker measure needs at least two modes");
  for (std::size_t d : s.dims())
    if (d != 2) throw Error(Errc::WrongShape, "Plücker measure is defined for qubit modes only");
  if (pivot < 1 || static_cast<std::size_t>(pivot) > s.modes())
    throw Error(Errc::IndexOutOfRange, "pivot mode out of range");

  const PureState<T> u = detail::unit_representative(s);
  PlueckerSet<T> ps = detail::maximal_minors(flatten(u, Bipartition({pivot}, u.modes())));
  real_t<T> acc(0);
  for (const T& p : ps.coords()) acc += ScalarTraits<T>::abs2(p);
  double sum;
  if constexpr (is_exact_v<T>) {
    const Rational n2 = u.norm2();
    sum = Rational(acc / (n2 * n2)).get_d();
  } else {
    sum = acc;
  }
  return {2.0 * std::sqrt(sum), pivot, std::move(ps)};
}

template <Scalar T>
double pluecker_measure(const PureState<T>& s, int pivot = 1) {
  return pluecker_measure_detail(s, pivot).value;
}

}  // namespace qgeom

#pragma once

#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "scalar.hpp"
#include "state.hpp"

namespace qgeom {

inline constexpr std::size_t kDefaultMaxAmps = 4096;
inline constexpr double kDefaultTol = 1e-10;

/// Quadrics cutting out the product states: every distinct 2x2 minor of every
/// canonical flattening, sign-canonical and sorted.
struct SegreIdeal {
  Dims dims;
  std::vector<MultiPoly> gens;
};

inline VarId state_var(std::span<const std::size_t> idx) {
  return VarId::state(std::vector<std::uint32_t>(idx.begin(), idx.end()));
}

inline SegreIdeal segre_generators(const Dims& dims, std::size_t max_amps = kDefaultMaxAmps) {
  if (dims.size() < 2) throw Error(Errc::WrongShape, "dims: at least two modes are required");
  for (std::size_t j = 0; j < dims.size(); ++j)
    if (dims[j] < 2) throw Error(Errc::WrongShape, "dims[" + std::to_string(j) + "]: mode dimension must be >= 2");
  const std::size_t n = dims_product(dims);
  if (n > max_amps)
    throw Error(Errc::TooLarge, "dims: " + std::to_string(n) + " amplitudes exceed the cap of " + std::to_string(max_amps));

  std::vector<VarId> vars(n);
  {
    MultiIndex idx(dims.size(), 0);
    for (std::size_t off = 0; off < n; ++off) {
      vars[off] = state_var(idx);
      for (std::size_t j = dims.size(); j-- > 0;) {
        if (++idx[j] < dims[j]) break;
        idx[j] = 0;
      }
    }
  }

  std::set<MultiPoly> unique;
  for (const Bipartition& b : canonical_bipartitions(dims.size())) {
    const auto fm = detail::flattening_map(dims, b);
    std::vector<std::size_t> at(fm.rows * fm.cols);
    for (std::size_t off = 0; off < n; ++off) at[fm.row_of[off] * fm.cols + fm.col_of[off]] = off;
    auto x = [&](std::size_t r, std::size_t c) { return MultiPoly(vars[at[r * fm.cols + c]]); };
    for (std::size_t r0 = 0; r0 < fm.rows; ++r0)
      for (std::size_t r1 = r0 + 1; r1 < fm.rows; ++r1)
        for (std::size_t c0 = 0; c0 < fm.cols; ++c0)
          for (std::size_t c1 = c0 + 1; c1 < fm.cols; ++c1)
            unique.insert((x(r0, c0) * x(r1, c1) - x(r0, c1) * x(r1, c0)).sign_canonical());
  }
  return {dims, std::vector<MultiPoly>(unique.begin(), unique.end())};
}

/// Assignment a[i1..im] -> amplitude, for evaluating state polynomials.
template <Scalar T>
Assignment<T> state_assignment(const PureState<T>& s) {
  Assignment<T> out;
  for (std::size_t off = 0; off < s.size(); ++off) out.emplace(state_var(s.multi_index(off)), s[off]);
  return out;
}

// Sum over all 2x2 minors of |det|^2. Three routes, equal in exact arithmetic:
//   gram:       (|M|_F^4 - |M M^H|_F^2) / 2
//   enumerated: direct loop over row and column pairs
//   projected:  sum over row pairs of |a|^2 |b - proj_a b|^2
// The Gram route cancels catastrophically near rank 1 in floating point.

template <Scalar T>
real_t<T> minor_sum_gram(const Matrix<T>& m) {
  using Tr = ScalarTraits<T>;
  const bool by_rows = m.rows() <= m.cols();
  const std::size_t n = by_rows ? m.rows() : m.cols();
  const std::size_t len = by_rows ? m.cols() : m.rows();
  auto at = [&](std::size_t i, std::size_t l) -> const T& { return by_rows ? m(i, l) : m(l, i); };

  real_t<T> fro2(0);
  for (const T& v : m.data()) fro2 += Tr::abs2(v);
  real_t<T> gram2(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      T g{};
      for (std::size_t l = 0; l < len; ++l) g += at(i, l) * Tr::conj(at(j, l));
      real_t<T> g2 = Tr::abs2(g);
      gram2 += (i == j) ? g2 : real_t<T>(2 * g2);
    }
  return real_t<T>((fro2 * fro2 - gram2) / 2);
}

template <Scalar T>
real_t<T> minor_sum_enumerated(const Matrix<T>& m) {
  using Tr = ScalarTraits<T>;
  real_t<T> acc(0);
  for (std::size_t r0 = 0; r0 < m.rows(); ++r0)
    for (std::size_t r1 = r0 + 1; r1 < m.rows(); ++r1)
      for (std::size_t c0 = 0; c0 < m.cols(); ++c0)
        for (std::size_t c1 = c0 + 1; c1 < m.cols(); ++c1)
          acc += Tr::abs2(m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0));
  return acc;
}

template <Scalar T>
real_t<T> minor_sum_projected(const Matrix<T>& m) {
  using Tr = ScalarTraits<T>;
  const bool by_rows = m.rows() <= m.cols();
  const std::size_t n = by_rows ? m.rows() : m.cols();
  const std::size_t len = by_rows ? m.cols() : m.rows();
  auto at = [&](std::size_t i, std::size_t l) -> const T& { return by_rows ? m(i, l) : m(l, i); };

  std::vector<real_t<T>> norms(n, real_t<T>(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < len; ++l) norms[i] += Tr::abs2(at(i, l));

  real_t<T> acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (norms[i] == 0) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      T inner{};
      for (std::size_t l = 0; l < len; ++l) inner += Tr::conj(at(i, l)) * at(j, l);
      const T coef = inner / Tr::from_real(norms[i]);
      real_t<T> resid(0);
      for (std::size_t l = 0; l < len; ++l) resid += Tr::abs2(at(j, l) - coef * at(i, l));
      acc += norms[i] * resid;
    }
  }
  return acc;
}

/// Sum of |2x2 minor|^2 over the matrix; zero exactly on rank <= 1.
/// Exact backends use the Gram identity. Floats use it too unless the result
/// is within 1e-6 of |M|_F^4, where cancellation dominates and the projected
/// route takes over.
template <Scalar T>
real_t<T> minor_sum(const Matrix<T>& m) {
  real_t<T> g = minor_sum_gram(m);
  if constexpr (!is_exact_v<T>) {
    double fro2 = 0.0;
    for (const T& v : m.data()) fro2 += std::norm(v);
    if (g <= 1e-6 * fro2 * fro2) return minor_sum_projected(m);
  }
  return g;
}

struct MeasureReport {
  double value = 0.0;
  std::vector<std::pair<Bipartition, double>> per_bipartition;
};

namespace detail {

// minor_sum of the flattening of the unit-norm representative of `s`.
template <Scalar T>
double normalized_minor_sum(const PureState<T>& s, const Bipartition& b) {
  if constexpr (is_exact_v<T>) {
    const Rational n2 = s.norm2();
    return Rational(minor_sum(flatten(s, b)) / (n2 * n2)).get_d();
  } else {
    return minor_sum(flatten(s, b));
  }
}

template <Scalar T>
PureState<T> unit_representative(const PureState<T>& s) {
  if constexpr (is_exact_v<T>) {
    return s;
  } else {
    return normalize(s);
  }
}

}  // namespace detail

/// 2 * sqrt(mean over canonical bipartitions of the normalized flattening
/// minor sums). Single-mode states report 0 with no bipartitions.
template <Scalar T>
MeasureReport generalized_concurrence(const PureState<T>& s) {
  MeasureReport report;
  const PureState<T> u = detail::unit_representative(s);
  const auto parts = canonical_bipartitions(s.modes());
  if (parts.empty()) return report;
  double total = 0.0;
  for (const Bipartition& b : parts) {
    const double term = std::max(0.0, detail::normalized_minor_sum(u, b));
    report.per_bipartition.emplace_back(b, term);
    total += term;
  }
  report.value = 2.0 * std::sqrt(total / static_cast<double>(parts.size()));
  return report;
}

/// Two-qubit concurrence 2|a00 a11 - a01 a10| / |s|^2.
template <Scalar T>
double concurrence2(const PureState<T>& s) {
  if (s.dims() != Dims{2, 2}) throw Error(Errc::WrongShape, "concurrence2: dims must be [2,2]");
  const T det = s[0] * s[3] - s[1] * s[2];
  if constexpr (is_exact_v<T>) {
    const Rational n2 = s.norm2();
    return 2.0 * std::sqrt(Rational(det.norm() / (n2 * n2)).get_d());
  } else {
    return 2.0 * std::abs(det) / s.norm2();
  }
}

/// Rank-1 test on one flattening: normalized minor sum <= tol^2.
template <Scalar T>
bool is_bipartite_separable(const PureState<T>& s, const Bipartition& b, double tol = kDefaultTol) {
  if (!(tol >= 0.0)) throw Error(Errc::IndexOutOfRange, "tol must be non-negative");
  const PureState<T> u = detail::unit_representative(s);
  if constexpr (is_exact_v<T>) {
    const Rational n2 = u.norm2();
    return Rational(minor_sum(flatten(u, b)) / (n2 * n2)) <= Rational(tol) * Rational(tol);
  } else {
    return minor_sum(flatten(u, b)) <= tol * tol;
  }
}

template <Scalar T>
bool is_fully_separable(const PureState<T>& s, double tol = kDefaultTol) {
  for (const Bipartition& b : canonical_bipartitions(s.modes()))
    if (!is_bipartite_separable(s, b, tol)) return false;
  return true;
}

}  // namespace qgeom

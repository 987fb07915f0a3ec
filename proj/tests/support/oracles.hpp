#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the
// library's determinant, minor-sum or relation code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "qgeom/qgeom.hpp"

namespace qgeom::testing {

using Rng = std::mt19937_64;

inline Complex random_complex(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng), g(rng)};
}

inline GaussRat random_gauss_rat(Rng& rng, long num = 9, long den = 7) {
  std::uniform_int_distribution<long> n(-num, num), d(1, den);
  return GaussRat(n(rng), d(rng), n(rng), d(rng));
}

inline LocalState<Complex> random_local(Rng& rng, std::size_t dim = 2) {
  std::vector<Complex> v(dim);
  for (auto& x : v) x = random_complex(rng);
  return make_local(std::move(v));
}

inline LocalState<GaussRat> random_exact_local(Rng& rng, std::size_t dim = 2) {
  while (true) {
    std::vector<GaussRat> v(dim);
    bool nonzero = false;
    for (auto& x : v) {
      x = random_gauss_rat(rng);
      nonzero = nonzero || !x.is_zero();
    }
    if (nonzero) return make_local(std::move(v));
  }
}

inline std::vector<LocalState<Complex>> random_factors(Rng& rng, const Dims& dims) {
  std::vector<LocalState<Complex>> f;
  for (std::size_t d : dims) f.push_back(random_local(rng, d));
  return f;
}

inline std::vector<LocalState<GaussRat>> random_exact_factors(Rng& rng, const Dims& dims) {
  std::vector<LocalState<GaussRat>> f;
  for (std::size_t d : dims) f.push_back(random_exact_local(rng, d));
  return f;
}

/// Haar-random pure state: normalized complex Gaussian vector.
inline State random_haar_state(Rng& rng, const Dims& dims) {
  std::vector<Complex> amps(dims_product(dims));
  for (auto& a : amps) a = random_complex(rng);
  return normalize(make_state(dims, std::move(amps)));
}

template <Scalar T>
Matrix<T> random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix<T> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if constexpr (is_exact_v<T>)
        m(r, c) = random_gauss_rat(rng);
      else
        m(r, c) = random_complex(rng);
    }
  return m;
}

/// Haar-ish unitary from Gram-Schmidt on a Ginibre matrix.
inline Matrix<Complex> random_unitary(Rng& rng, std::size_t d) {
  std::vector<std::vector<Complex>> cols(d, std::vector<Complex>(d));
  for (auto& c : cols)
    for (auto& x : c) x = random_complex(rng);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Complex ip{};
      for (std::size_t l = 0; l < d; ++l) ip += std::conj(cols[i][l]) * cols[j][l];
      for (std::size_t l = 0; l < d; ++l) cols[j][l] -= ip * cols[i][l];
    }
    double n = 0.0;
    for (auto& x : cols[j]) n += std::norm(x);
    n = std::sqrt(n);
    for (auto& x : cols[j]) x /= n;
  }
  Matrix<Complex> u(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) u(r, c) = cols[c][r];
  return u;
}

/// Leibniz expansion: sum over permutations of sign * product.
template <Scalar T>
T leibniz_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total{};
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T prod(1);
    for (std::size_t i = 0; i < n; ++i) prod *= m(i, perm[i]);
    total += (inversions % 2 == 0) ? prod : T(-prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Brute-force sum of |2x2 minor|^2.
template <Scalar T>
real_t<T> brute_minor_sum(const Matrix<T>& m) {
  real_t<T> acc(0);
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.rows(); ++b)
      for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t d = 0; d < m.cols(); ++d) {
          if (a >= b || c >= d) continue;
          const T minor = m(a, c) * m(b, d) - m(a, d) * m(b, c);
          acc += ScalarTraits<T>::abs2(minor);
        }
  return acc;
}

/// Flattening built straight from the definition: row index over the modes
/// in `left` (1-based), column over the rest, both row-major.
template <Scalar T>
Matrix<T> brute_flatten(const PureState<T>& s, const std::vector<int>& left) {
  const std::size_t m = s.modes();
  std::vector<bool> in_left(m, false);
  for (int j : left) in_left[j - 1] = true;
  std::size_t rows = 1, cols = 1;
  for (std::size_t j = 0; j < m; ++j) (in_left[j] ? rows : cols) *= s.dims()[j];
  Matrix<T> out(rows, cols);
  for (std::size_t off = 0; off < s.size(); ++off) {
    std::vector<std::size_t> idx(m);
    std::size_t rem = off;
    for (std::size_t j = m; j-- > 0;) {
      idx[j] = rem % s.dims()[j];
      rem /= s.dims()[j];
    }
    std::size_t r = 0, c = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (in_left[j])
        r = r * s.dims()[j] + idx[j];
      else
        c = c * s.dims()[j] + idx[j];
    }
    out(r, c) = s[off];
  }
  return out;
}

/// Klein quadric P12 P34 - P13 P24 + P14 P23 on the 2x2 minors of a 2x4 matrix.
template <Scalar T>
T klein_residual(const Matrix<T>& m) {
  auto p = [&](int i, int j) { return m(0, i - 1) * m(1, j - 1) - m(0, j - 1) * m(1, i - 1); };
  return p(1, 2) * p(3, 4) - p(1, 3) * p(2, 4) + p(1, 4) * p(2, 3);
}

/// max |a - lambda b| with lambda the least-squares scale.
inline double distance_up_to_scale(const State& a, const State& b) {
  Complex num{}, den{};
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::conj(b[i]) * a[i];
    den += std::conj(b[i]) * b[i];
  }
  const Complex lambda = num / den;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - lambda * b[i]));
  return worst;
}

/// True when a = lambda b exactly for some nonzero Gaussian rational lambda.
inline bool proportional(const ExactState& a, const ExactState& b) {
  if (a.size() != b.size()) return false;
  std::size_t k = 0;
  while (k < b.size() && b[k].is_zero()) ++k;
  if (k == b.size() || a[k].is_zero()) return false;
  const GaussRat lambda = a[k] / b[k];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != lambda * b[i]) return false;
  return true;
}

inline State ghz3() {
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<Complex> a(8);
  a[0] = h;
  a[7] = h;
  return make_state({2, 2, 2}, std::move(a));
}

inline State w3() {
  const double t = 1.0 / std::sqrt(3.0);
  std::vector<Complex> a(8);
  a[1] = t;
  a[2] = t;
  a[4] = t;
  return make_state({2, 2, 2}, std::move(a));
}

inline State bell() {
  const double h = 1.0 / std::sqrt(2.0);
  return make_state<Complex>({2, 2}, {h, 0.0, 0.0, h});
}

inline ExactState exact_ghz3() {
  std::vector<GaussRat> a(8);
  a[0] = 1;
  a[7] = 1;
  return make_state({2, 2, 2}, std::move(a));
}

inline ExactState exact_w3() {
  std::vector<GaussRat> a(8);
  a[1] = 1;
  a[2] = 1;
  a[4] = 1;
  return make_state({2, 2, 2}, std::move(a));
}

inline ExactState exact_bell() { return make_state<GaussRat>({2, 2}, {1, 0, 0, 1}); }

}  // namespace qgeom::testing

#pragma once

#include <cmath>
#include <complex>
#include <concepts>

#include "gauss_rat.hpp"

namespace qgeom {

using Complex = std::complex<double>;

/// Per-backend arithmetic helpers. `real_type` is the field that holds
/// squared moduli: double for the float backend, Rational for the exact one.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  using real_type = double;
  static constexpr bool exact = false;

  static double abs2(const Complex& z) { return std::norm(z); }
  static Complex conj(const Complex& z) { return std::conj(z); }
  static bool is_zero(const Complex& z) { return z == Complex{}; }
  static bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
  static Complex from_real(double r) { return {r, 0.0}; }
  static Complex to_complex(const Complex& z) { return z; }
  static double to_double(double r) { return r; }
};

template <>
struct ScalarTraits<GaussRat> {
  using real_type = Rational;
  static constexpr bool exact = true;

  static Rational abs2(const GaussRat& z) { return z.norm(); }
  static GaussRat conj(const GaussRat& z) { return z.conj(); }
  static bool is_zero(const GaussRat& z) { return z.is_zero(); }
  static bool is_finite(const GaussRat&) { return true; }
  static GaussRat from_real(const Rational& r) { return GaussRat(r); }
  static Complex to_complex(const GaussRat& z) { return z.to_complex(); }
  static double to_double(const Rational& r) { return r.get_d(); }
};

template <class T>
concept Scalar = requires { typename ScalarTraits<T>::real_type; };

template <Scalar T>
using real_t = typename ScalarTraits<T>::real_type;

template <Scalar T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

/// Converts a Gaussian rational into the target backend.
template <Scalar T>
T scalar_from(const GaussRat& z) {
  if constexpr (is_exact_v<T>) {
    return z;
  } else {
    return z.to_complex();
  }
}

}  // namespace qgeom

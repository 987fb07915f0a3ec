#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace qgeom {

/// Dense row-major matrix.
template <Scalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      throw Error(Errc::DimensionMismatch, "matrix storage does not match rows*cols");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::ShapeError, "matrix product: inner dimensions differ");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& ail = a(i, l);
        if (ScalarTraits<T>::is_zero(ail)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += ail * b(l, j);
      }
    return p;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Determinant of a square matrix. Direct formula up to 2x2, Gaussian
/// elimination beyond (partial pivoting on modulus for floats, first nonzero
/// pivot for exact arithmetic).
template <Scalar T>
T determinant(Matrix<T> a) {
  using Tr = ScalarTraits<T>;
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error(Errc::ShapeError, "determinant of a non-square matrix");
  if (n == 0) return T(1);
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);

  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    if constexpr (is_exact_v<T>) {
      for (std::size_t r = col; r < n; ++r)
        if (!Tr::is_zero(a(r, col))) {
          pivot = r;
          break;
        }
    } else {
      double best = 0.0;
      for (std::size_t r = col; r < n; ++r) {
        double m = Tr::abs2(a(r, col));
        if (m > best) {
          best = m;
          pivot = r;
        }
      }
    }
    if (pivot == n) return T{};
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    const T p = a(col, col);
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (Tr::is_zero(a(r, col))) continue;
      const T f = a(r, col) / p;
      for (std::size_t c = col + 1; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

}  // namespace qgeom

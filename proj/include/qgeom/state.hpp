#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace qgeom {

using Dims = std::vector<std::size_t>;
using MultiIndex = std::vector<std::size_t>;

inline std::size_t dims_product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
}

/// Multipartite pure state: an amplitude tensor over m modes, stored flat in
/// row-major order with mode 1 most significant. The zero vector is not a
/// state; amplitudes are kept unnormalized.
template <Scalar T>
class PureState {
 public:
  using value_type = T;

  static PureState make(Dims dims, std::vector<T> amps) {
    if (dims.empty()) throw Error(Errc::DimensionMismatch, "dims: at least one mode is required");
    for (std::size_t j = 0; j < dims.size(); ++j)
      if (dims[j] < 2)
        throw Error(Errc::DimensionMismatch, "dims[" + std::to_string(j) + "]: mode dimension must be >= 2");
    const std::size_t n = dims_product(dims);
    if (amps.size() != n)
      throw Error(Errc::DimensionMismatch, "amps: length " + std::to_string(amps.size()) + " != product of dims " +
                                               std::to_string(n));
    bool nonzero = false;
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if (!ScalarTraits<T>::is_finite(amps[i]))
        throw Error(Errc::NonFinite, "amps[" + std::to_string(i) + "]: amplitude is not finite");
      nonzero = nonzero || !ScalarTraits<T>::is_zero(amps[i]);
    }
    if (!nonzero) throw Error(Errc::ZeroVector, "amps: all amplitudes are zero");
    return PureState(std::move(dims), std::move(amps));
  }

  const Dims& dims() const { return dims_; }
  std::span<const T> amps() const { return amps_; }
  std::size_t modes() const { return dims_.size(); }
  std::size_t size() const { return amps_.size(); }

  std::size_t offset(std::span<const std::size_t> idx) const {
    if (idx.size() != dims_.size()) throw Error(Errc::IndexOutOfRange, "multi-index has the wrong number of modes");
    std::size_t off = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (idx[j] >= dims_[j]) throw Error(Errc::IndexOutOfRange, "multi-index component out of range");
      off = off * dims_[j] + idx[j];
    }
    return off;
  }

  MultiIndex multi_index(std::size_t off) const {
    MultiIndex idx(dims_.size());
    for (std::size_t j = dims_.size(); j-- > 0;) {
      idx[j] = off % dims_[j];
      off /= dims_[j];
    }
    return idx;
  }

  const T& operator[](std::size_t off) const { return amps_[off]; }
  const T& at(std::span<const std::size_t> idx) const { return amps_[offset(idx)]; }

  /// Squared 2-norm.
  real_t<T> norm2() const {
    real_t<T> acc(0);
    for (const T& a : amps_) acc += ScalarTraits<T>::abs2(a);
    return acc;
  }

  friend bool operator==(const PureState&, const PureState&) = default;

 private:
  PureState(Dims dims, std::vector<T> amps) : dims_(std::move(dims)), amps_(std::move(amps)) {}

  Dims dims_;
  std::vector<T> amps_;
};

using State = PureState<Complex>;
using ExactState = PureState<GaussRat>;

template <Scalar T>
PureState<T> make_state(Dims dims, std::vector<T> amps) {
  return PureState<T>::make(std::move(dims), std::move(amps));
}

/// One mode's amplitude vector; the basis labels are its positions.
template <Scalar T>
class LocalState {
 public:
  static LocalState make(std::vector<T> vec) {
    if (vec.size() < 2) throw Error(Errc::DimensionMismatch, "local state: dimension must be >= 2");
    bool nonzero = false;
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (!ScalarTraits<T>::is_finite(vec[i]))
        throw Error(Errc::NonFinite, "local state[" + std::to_string(i) + "]: amplitude is not finite");
      nonzero = nonzero || !ScalarTraits<T>::is_zero(vec[i]);
    }
    if (!nonzero) throw Error(Errc::ZeroVector, "local state: all amplitudes are zero");
    return LocalState(std::move(vec));
  }

  std::size_t dim() const { return vec_.size(); }
  std::span<const T> vec() const { return vec_; }
  const T& operator[](std::size_t i) const { return vec_[i]; }

  friend bool operator==(const LocalState&, const LocalState&) = default;

 private:
  explicit LocalState(std::vector<T> vec) : vec_(std::move(vec)) {}
  std::vector<T> vec_;
};

template <Scalar T>
LocalState<T> make_local(std::vector<T> vec) {
  return LocalState<T>::make(std::move(vec));
}

/// Split of modes {1..m} into (left, complement). Any nonempty proper subset is
/// accepted; the canonical representative of the unordered split contains mode 1.
class Bipartition {
 public:
  Bipartition(std::vector<int> left, std::size_t modes) : left_(std::move(left)), modes_(modes) {
    if (left_.empty()) throw Error(Errc::IndexOutOfRange, "partition: left side is empty");
    if (left_.size() >= modes_) throw Error(Errc::IndexOutOfRange, "partition: left side must be a proper subset");
    for (std::size_t i = 0; i < left_.size(); ++i) {
      if (left_[i] < 1 || static_cast<std::size_t>(left_[i]) > modes_)
        throw Error(Errc::IndexOutOfRange, "partition: mode " + std::to_string(left_[i]) + " out of range");
      if (i > 0 && left_[i] <= left_[i - 1])
        throw Error(Errc::IndexOutOfRange, "partition: modes must be strictly increasing");
    }
  }

  const std::vector<int>& left() const { return left_; }
  std::size_t modes() const { return modes_; }

  std::vector<int> right() const {
    std::vector<int> r;
    for (int j = 1; j <= static_cast<int>(modes_); ++j)
      if (!contains(j)) r.push_back(j);
    return r;
  }

  bool contains(int mode) const { return std::binary_search(left_.begin(), left_.end(), mode); }
  bool is_canonical() const { return left_.front() == 1; }
  Bipartition complement() const { return Bipartition(right(), modes_); }
  Bipartition canonical() const { return is_canonical() ? *this : complement(); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition& a, const Bipartition& b) {
    return std::tie(a.modes_, a.left_) <=> std::tie(b.modes_, b.left_);
  }

 private:
  std::vector<int> left_;
  std::size_t modes_;
};

/// All canonical bipartitions of m modes (2^(m-1) - 1 of them), sorted by left set.
inline std::vector<Bipartition> canonical_bipartitions(std::size_t modes) {
  std::vector<Bipartition> out;
  if (modes < 2) return out;
  const std::size_t rest = modes - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << rest); ++mask) {
    if (mask == (std::size_t{1} << rest) - 1) continue;
    std::vector<int> left{1};
    for (std::size_t b = 0; b < rest; ++b)
      if (mask & (std::size_t{1} << b)) left.push_back(static_cast<int>(b + 2));
    out.emplace_back(std::move(left), modes);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <Scalar T>
using Flattening = Matrix<T>;

namespace detail {

// Row/column index of every flat offset under a bipartition.
struct FlatteningMap {
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::vector<std::size_t> row_of;
  std::vector<std::size_t> col_of;
};

inline FlatteningMap flattening_map(const Dims& dims, const Bipartition& b) {
  if (b.modes() != dims.size()) throw Error(Errc::IndexOutOfRange, "partition: mode count does not match the state");
  FlatteningMap fm;
  for (std::size_t j = 0; j < dims.size(); ++j)
    (b.contains(static_cast<int>(j + 1)) ? fm.rows : fm.cols) *= dims[j];
  const std::size_t n = fm.rows * fm.cols;
  fm.row_of.resize(n);
  fm.col_of.resize(n);
  MultiIndex idx(dims.size(), 0);
  for (std::size_t off = 0; off < n; ++off) {
    std::size_t r = 0, c = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
      if (b.contains(static_cast<int>(j + 1)))
        r = r * dims[j] + idx[j];
      else
        c = c * dims[j] + idx[j];
    }
    fm.row_of[off] = r;
    fm.col_of[off] = c;
    for (std::size_t j = dims.size(); j-- > 0;) {
      if (++idx[j] < dims[j]) break;
      idx[j] = 0;
    }
  }
  return fm;
}

}  // namespace detail

/// Matrix view of the amplitudes: rows indexed by the modes in `b.left()`,
/// columns by the rest, both row-major in mode order.
template <Scalar T>
Flattening<T> flatten(const PureState<T>& s, const Bipartition& b) {
  const auto fm = detail::flattening_map(s.dims(), b);
  Matrix<T> m(fm.rows, fm.cols);
  for (std::size_t off = 0; off < s.size(); ++off) m(fm.row_of[off], fm.col_of[off]) = s[off];
  return m;
}

template <Scalar T>
PureState<T> scale(const PureState<T>& s, const T& lambda) {
  std::vector<T> amps(s.amps().begin(), s.amps().end());
  for (T& a : amps) a *= lambda;
  return make_state(s.dims(), std::move(amps));
}

/// Unit 2-norm representative of the projective point.
inline State normalize(const State& s) {
  double big = 0.0;
  for (const Complex& a : s.amps()) big = std::max({big, std::abs(a.real()), std::abs(a.imag())});
  double acc = 0.0;
  for (const Complex& a : s.amps()) acc += std::norm(a / big);
  const double norm = big * std::sqrt(acc);
  std::vector<Complex> amps(s.amps().begin(), s.amps().end());
  for (Complex& a : amps) a /= norm;
  return make_state(s.dims(), std::move(amps));
}

inline LocalState<Complex> normalize(const LocalState<Complex>& v) {
  double acc = 0.0;
  for (const Complex& a : v.vec()) acc += std::norm(a);
  const double norm = std::sqrt(acc);
  std::vector<Complex> out(v.vec().begin(), v.vec().end());
  for (Complex& a : out) a /= norm;
  return make_local(std::move(out));
}

/// Tensor product of local states: amplitude (i1..im) = prod_j factors[j][i_j].
template <Scalar T>
PureState<T> segre_map(std::span<const LocalState<T>> factors) {
  if (factors.size() < 2) throw Error(Errc::DimensionMismatch, "segre_map: at least two factors are required");
  Dims dims;
  for (const auto& f : factors) dims.push_back(f.dim());
  std::vector<T> amps{T(1)};
  for (const auto& f : factors) {
    std::vector<T> next;
    next.reserve(amps.size() * f.dim());
    for (const T& a : amps)
      for (const T& v : f.vec()) next.push_back(a * v);
    amps = std::move(next);
  }
  return make_state(std::move(dims), std::move(amps));
}

template <Scalar T>
PureState<T> segre_map(const std::vector<LocalState<T>>& factors) {
  return segre_map(std::span<const LocalState<T>>(factors));
}

/// Local factors of a product state, read off the fibers through the
/// largest-modulus amplitude. Float states are normalized first and the
/// returned factors have unit norm; exact factors are scaled so their pivot
/// component is 1. Returns nullopt when pivot * prod(factors) misses the state
/// by more than 10*tol in modulus at any amplitude.
template <Scalar T>
std::optional<std::vector<LocalState<T>>> try_local_factors(const PureState<T>& s, double tol) {
  using Tr = ScalarTraits<T>;
  if (!(tol >= 0.0)) throw Error(Errc::IndexOutOfRange, "tol must be non-negative");

  const PureState<T> w = [&] {
    if constexpr (is_exact_v<T>) {
      return s;
    } else {
      return normalize(s);
    }
  }();

  std::size_t pivot_off = 0;
  real_t<T> best = Tr::abs2(w[0]);
  for (std::size_t off = 1; off < w.size(); ++off) {
    real_t<T> m = Tr::abs2(w[off]);
    if (m > best) {
      best = m;
      pivot_off = off;
    }
  }
  const MultiIndex pivot = w.multi_index(pivot_off);
  const T pivot_amp = w[pivot_off];

  std::vector<std::vector<T>> fibers(w.modes());
  for (std::size_t j = 0; j < w.modes(); ++j) {
    MultiIndex idx = pivot;
    for (std::size_t i = 0; i < w.dims()[j]; ++i) {
      idx[j] = i;
      fibers[j].push_back(w.at(idx) / pivot_amp);
    }
  }

  const real_t<T> bound = [&] {
    const double t = 10.0 * tol;
    return real_t<T>(t * t);
  }();
  for (std::size_t off = 0; off < w.size(); ++off) {
    const MultiIndex idx = w.multi_index(off);
    T prod = pivot_amp;
    for (std::size_t j = 0; j < w.modes(); ++j) prod *= fibers[j][idx[j]];
    if (Tr::abs2(prod - w[off]) > bound) return std::nullopt;
  }

  std::vector<LocalState<T>> out;
  for (auto& f : fibers) {
    auto local = make_local(std::move(f));
    if constexpr (is_exact_v<T>) {
      out.push_back(std::move(local));
    } else {
      out.push_back(normalize(local));
    }
  }
  return out;
}

template <Scalar T>
std::vector<LocalState<T>> local_factors(const PureState<T>& s, double tol) {
  auto f = try_local_factors(s, tol);
  if (!f) throw Error(Errc::NotProduct, "state is not within tolerance of a product state");
  return std::move(*f);
}

/// Reorders modes: mode j of the result is mode perm[j] of `s` (0-based).
template <Scalar T>
PureState<T> permute_modes(const PureState<T>& s, std::span<const std::size_t> perm) {
  const std::size_t m = s.modes();
  std::vector<bool> seen(m, false);
  if (perm.size() != m) throw Error(Errc::IndexOutOfRange, "permutation has the wrong length");
  for (std::size_t p : perm) {
    if (p >= m || seen[p]) throw Error(Errc::IndexOutOfRange, "not a permutation of the modes");
    seen[p] = true;
  }
  Dims dims(m);
  for (std::size_t j = 0; j < m; ++j) dims[j] = s.dims()[perm[j]];
  std::vector<T> amps(s.size());
  MultiIndex src(m);
  for (std::size_t off = 0; off < s.size(); ++off) {
    std::size_t rem = off;
    MultiIndex dst(m);
    for (std::size_t j = m; j-- > 0;) {
      dst[j] = rem % dims[j];
      rem /= dims[j];
    }
    for (std::size_t j = 0; j < m; ++j) src[perm[j]] = dst[j];
    amps[off] = s.at(src);
  }
  return make_state(std::move(dims), std::move(amps));
}

/// Applies a dim x dim operator to one mode (1-based).
template <Scalar T>
PureState<T> apply_local(const PureState<T>& s, std::size_t mode, const Matrix<T>& op) {
  if (mode < 1 || mode > s.modes()) throw Error(Errc::IndexOutOfRange, "mode out of range");
  const std::size_t j = mode - 1;
  const std::size_t d = s.dims()[j];
  if (op.rows() != d || op.cols() != d) throw Error(Errc::ShapeError, "operator does not match the mode dimension");
  std::size_t stride = 1;
  for (std::size_t l = j + 1; l < s.modes(); ++l) stride *= s.dims()[l];
  std::vector<T> out(s.size());
  for (std::size_t off = 0; off < s.size(); ++off) {
    const std::size_t i = (off / stride) % d;
    const std::size_t base = off - i * stride;
    T acc{};
    for (std::size_t k = 0; k < d; ++k) acc += op(i, k) * s[base + k * stride];
    out[off] = acc;
  }
  return make_state(s.dims(), std::move(out));
}

}  // namespace qgeom

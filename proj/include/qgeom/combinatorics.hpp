#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace qgeom {

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    // r * num / i is exact at every step; guard the multiplication.
    if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    r = r * num / i;
  }
  return r;
}

/// All strictly increasing k-subsets of {first, ..., first+n-1}, in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int n, int k, int first = 1) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = first + i;
  const int last = first + n - 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == last - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Lexicographic rank of a strictly increasing k-subset of {1..n}.
inline std::size_t subset_rank(std::span<const int> subset, int n) {
  const int k = static_cast<int>(subset.size());
  std::size_t rank = 0;
  int prev = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (int v = prev + 1; v < subset[pos]; ++v) rank += binomial(n - v, k - pos - 1);
    prev = subset[pos];
  }
  return rank;
}

/// Sorts `idx` in place and returns the parity of the sorting permutation
/// (+1 or -1), or 0 when an index repeats.
inline int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

}  // namespace qgeom

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

namespace phl {

/// C(n, r), saturating at UINT64_MAX instead of overflowing.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    const std::uint64_t numer = n - r + i;
    // result * numer / i is exact at every step; guard the product.
    if (result > std::numeric_limits<std::uint64_t>::max() / numer) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * numer / i;
  }
  return result;
}

/// Colex rank of a strictly increasing subset: sum_i C(s_i, i+1).
inline std::uint64_t colex_rank(std::span<const int> sorted_subset) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted_subset.size(); ++i) {
    rank += binomial(static_cast<std::uint64_t>(sorted_subset[i]), i + 1);
  }
  return rank;
}

/// Inverse of colex_rank for subsets of size r drawn from [0, n).
inline std::vector<int> colex_unrank(std::uint64_t rank, int n, int r) {
  std::vector<int> subset(static_cast<std::size_t>(r));
  int c = n - 1;
  for (int pos = r; pos >= 1; --pos) {
    while (binomial(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(pos)) > rank) --c;
    subset[static_cast<std::size_t>(pos - 1)] = c;
    rank -= binomial(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(pos));
    --c;
  }
  return subset;
}

/// Calls fn(span) for every r-subset of [0, n) in lexicographic order.
/// fn may return bool; returning false stops the enumeration.
template <class Fn>
bool for_each_subset(int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if constexpr (std::is_same_v<decltype(fn(std::span<const int>(idx))), bool>) {
      if (!fn(std::span<const int>(idx))) return false;
    } else {
      fn(std::span<const int>(idx));
    }
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

/// Same as for_each_subset but over the elements of `pool`.
template <class Fn>
bool for_each_subset_of(std::span<const int> pool, int r, Fn&& fn) {
  std::vector<int> picked(static_cast<std::size_t>(std::max(r, 0)));
  return for_each_subset(static_cast<int>(pool.size()), r, [&](std::span<const int> idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) picked[i] = pool[static_cast<std::size_t>(idx[i])];
    if constexpr (std::is_same_v<decltype(fn(std::span<const int>(picked))), bool>) {
      return fn(std::span<const int>(picked));
    } else {
      fn(std::span<const int>(picked));
      return true;
    }
  });
}

}  // namespace phl

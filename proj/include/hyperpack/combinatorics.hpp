#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace hyperpack {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaskVertices = 64;

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(r);
}

inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline int popcount(Mask m) { return std::popcount(m); }

// Calls fn(const std::vector<T>&) for every r-subset of items, in
// lexicographic order of positions. Stops early when fn returns false.
template <typename T, typename Fn>
bool for_each_subset(const std::vector<T>& items, std::size_t r, Fn&& fn) {
  const std::size_t n = items.size();
  if (r > n) return true;
  std::vector<std::size_t> pos(r);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  std::vector<T> current(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) current[i] = items[pos[i]];
    if (!fn(static_cast<const std::vector<T>&>(current))) return false;
    std::size_t i = r;
    while (i > 0 && pos[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return true;
    ++pos[i - 1];
    for (std::size_t j = i; j < r; ++j) pos[j] = pos[j - 1] + 1;
  }
}

}  // namespace hyperpack

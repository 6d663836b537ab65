#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace krep {

// C(n, k) as a double; exact for every value the library actually uses
// (results below 2^53).
double binomial(std::uint64_t n, std::uint64_t k);

// C(n, k) saturating at UINT64_MAX.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

// Visits every k-subset of {0, ..., n-1} in lexicographic order. The callback
// receives the subset as an ascending span and returns false to stop.
template <class Callback>
void for_each_subset(std::uint32_t n, std::uint32_t k, Callback&& callback) {
  if (k > n) return;
  std::vector<std::uint32_t> subset(k);
  for (std::uint32_t i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    if (!callback(std::span<const std::uint32_t>(subset))) return;
    if (k == 0) return;
    std::int64_t pos = static_cast<std::int64_t>(k) - 1;
    while (pos >= 0 && subset[pos] == n - k + pos) --pos;
    if (pos < 0) return;
    ++subset[pos];
    for (std::uint32_t j = static_cast<std::uint32_t>(pos) + 1; j < k; ++j)
      subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace krep

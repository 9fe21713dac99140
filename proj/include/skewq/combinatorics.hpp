#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace skewq {

// Largest number of variables any bitmask-backed structure supports.
inline constexpr int kMaxVariables = 16;

constexpr std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// Colexicographic rank of the 1-based pair i < j.
constexpr std::size_t pair_rank(int i, int j) {
  return static_cast<std::size_t>((j - 1) * (j - 2) / 2 + (i - 1));
}

// Colexicographic rank of the 1-based triple i < j < k. Triples are ordered
// by k, then j, then i: {1,2,3} {1,2,4} {1,3,4} {2,3,4} {1,2,5} ...
constexpr std::size_t triple_rank(int i, int j, int k) {
  return static_cast<std::size_t>(binomial(k - 1, 3) + binomial(j - 1, 2) + (i - 1));
}

constexpr std::array<int, 3> triple_unrank(std::size_t rank) {
  std::array<int, 3> t{};
  int k = 3;
  while (binomial(k, 3) <= rank) ++k;
  rank -= binomial(k - 1, 3);
  int j = 2;
  while (binomial(j, 2) <= rank) ++j;
  rank -= binomial(j - 1, 2);
  t = {static_cast<int>(rank) + 1, j, k};
  return t;
}

constexpr std::array<int, 2> pair_unrank(std::size_t rank) {
  int j = 2;
  while (binomial(j, 2) <= rank) ++j;
  return {static_cast<int>(rank - binomial(j - 1, 2)) + 1, j};
}

constexpr bool parity(std::uint64_t x) { return (std::popcount(x) & 1) != 0; }

}  // namespace skewq

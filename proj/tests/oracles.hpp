#pragma once

// Test-side reference computations. Deliberately naive and independent of
// the library's bit layouts: everything is recomputed from definitions.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "skewq/sign_core.hpp"

namespace skewq::testing {

// Full +-1 table, 1-based, eps[i][i] = 1.
using Eps = std::vector<std::vector<int>>;

inline Eps eps_table(const SignMatrix& s) {
  Eps e(s.n() + 1, std::vector<int>(s.n() + 1, 1));
  for (int i = 1; i <= s.n(); ++i)
    for (int j = 1; j <= s.n(); ++j) e[i][j] = s(i, j);
  return e;
}

inline std::set<Triple> naive_bad(const Eps& e, int n) {
  std::set<Triple> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (e[i][j] * e[j][k] * e[k][i] == -1) out.insert({i, j, k});
  return out;
}

inline std::set<Triple> as_set(const TripleSet& t) {
  auto v = t.triples();
  return {v.begin(), v.end()};
}

inline SignMatrix random_sign_matrix(int n, std::mt19937_64& rng) {
  SignMatrix s(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) s.set(i, j, (rng() & 1) ? -1 : 1);
  return s;
}

// Every sign matrix on n variables, indexed by a C(n,2)-bit word.
inline SignMatrix sign_matrix_from_word(int n, std::uint64_t w) {
  SignMatrix s(n);
  int b = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++b) s.set(i, j, ((w >> b) & 1) ? -1 : 1);
  return s;
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

// Rank over F_2 as log2 of the size of the row space, found by closing
// {0} under xor with each row.
inline int span_rank(const std::vector<std::uint64_t>& rows) {
  std::set<std::uint64_t> span{0};
  for (auto r : rows) {
    std::set<std::uint64_t> next = span;
    for (auto x : span) next.insert(x ^ r);
    span.swap(next);
  }
  int r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

// Integer determinant by fraction-free Bareiss elimination.
inline long long bareiss_det(std::vector<std::vector<long long>> a) {
  const std::size_t n = a.size();
  long long prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace skewq::testing

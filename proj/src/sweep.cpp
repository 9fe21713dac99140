#include "skewq/sweep.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include <omp.h>

#include "skewq/clifford.hpp"
#include "skewq/combinatorics.hpp"
#include "skewq/errors.hpp"
#include "skewq/point_scheme.hpp"
#include "skewq/sign_core.hpp"

namespace skewq {

namespace {

void check_sweep_n(int n) {
  if (n < 1 || n > kMaxSweepN) {
    throw GuardViolation("sweep kernels support 1 <= n <= " + std::to_string(kMaxSweepN));
  }
}

// Triples in colex order with the pair ranks of their three edges.
struct TripleGeometry {
  std::vector<std::array<int, 3>> triples;
  std::vector<std::uint32_t> vertex_mask;
};

TripleGeometry geometry(int n) {
  TripleGeometry g;
  for (std::size_t r = 0; r < binomial(n, 3); ++r) {
    const auto t = triple_unrank(r);
    g.triples.push_back(t);
    g.vertex_mask.push_back((1u << (t[0] - 1)) | (1u << (t[1] - 1)) | (1u << (t[2] - 1)));
  }
  return g;
}

int rank_f2(std::vector<std::uint64_t> rows, int m) {
  int rank = 0;
  for (int col = 0; col < m; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && !(rows[piv] & bit)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && (rows[r] & bit)) rows[r] ^= rows[static_cast<std::size_t>(rank)];
    ++rank;
  }
  return rank;
}

PatternRecord evaluate_pattern(int n, std::uint64_t pattern, const TripleGeometry& g,
                               std::vector<std::uint32_t>& edges) {
  PatternRecord rec;
  rec.triples = pattern_to_triples(n, pattern);
  edges.clear();
  for (std::uint64_t s = rec.triples; s != 0; s &= s - 1)
    edges.push_back(g.vertex_mask[static_cast<std::size_t>(std::countr_zero(s))]);
  for (IndexSet t : minimal_transversals(n, edges)) rec.ell += (n - t.size() == 2);

  // Generators t_i, t_j anticommute iff mu_ij = +1 iff the pattern bit is clear.
  const int m = n - 1;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
  for (int j = 2; j <= m; ++j)
    for (int i = 1; i < j; ++i)
      if (!((pattern >> pair_rank(i, j)) & 1)) {
        rows[static_cast<std::size_t>(i - 1)] |= std::uint64_t{1} << (j - 1);
        rows[static_cast<std::size_t>(j - 1)] |= std::uint64_t{1} << (i - 1);
      }
  rec.f2_rank = rank_f2(std::move(rows), m);
  return rec;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

std::uint64_t map_triples(std::uint64_t mask, const std::vector<std::uint8_t>& table) {
  std::uint64_t out = 0;
  for (std::uint64_t s = mask; s != 0; s &= s - 1)
    out |= std::uint64_t{1} << table[static_cast<std::size_t>(std::countr_zero(s))];
  return out;
}

OrbitPartition sorted_partition(std::vector<std::uint32_t> orbit_of,
                                std::vector<std::uint64_t> canonical) {
  std::vector<std::uint32_t> order(canonical.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return encoding_less(canonical[a], canonical[b]); });
  std::vector<std::uint32_t> relabel(order.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) relabel[order[k]] = k;

  OrbitPartition out;
  out.canonical.resize(order.size());
  out.sizes.assign(order.size(), 0);
  for (std::uint32_t k = 0; k < order.size(); ++k) out.canonical[k] = canonical[order[k]];
  out.orbit_of.resize(orbit_of.size());
  for (std::size_t p = 0; p < orbit_of.size(); ++p) {
    out.orbit_of[p] = relabel[orbit_of[p]];
    ++out.sizes[out.orbit_of[p]];
  }
  return out;
}

}  // namespace

int effective_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

std::uint64_t pattern_count(int n) {
  check_sweep_n(n);
  return std::uint64_t{1} << binomial(n - 1, 2);
}

std::uint64_t pattern_to_triples(int n, std::uint64_t pattern) {
  std::uint64_t mask = 0;
  // eps_ij = -1 iff the pattern bit is set (only for j < n).
  auto neg = [&](int i, int j) -> int {
    return j < n ? static_cast<int>((pattern >> pair_rank(i, j)) & 1) : 0;
  };
  for (int k = 3; k <= n; ++k)
    for (int j = 2; j < k; ++j)
      for (int i = 1; i < j; ++i)
        if ((neg(i, j) + neg(j, k) + neg(i, k)) & 1) mask |= std::uint64_t{1} << triple_rank(i, j, k);
  return mask;
}

std::uint64_t triples_to_pattern(int n, std::uint64_t triples) {
  std::uint64_t pattern = 0;
  for (int j = 2; j < n; ++j)
    for (int i = 1; i < j; ++i)
      if ((triples >> triple_rank(i, j, n)) & 1) pattern |= std::uint64_t{1} << pair_rank(i, j);
  return pattern;
}

bool encoding_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  return (a & low) == 0;
}

std::vector<PatternRecord> sweep_patterns_serial(int n) {
  const std::uint64_t total = pattern_count(n);
  std::vector<PatternRecord> out;
  out.reserve(total);
  for (std::uint64_t pattern = 0; pattern < total; ++pattern) {
    SignMatrix s(n);
    for (int j = 2; j < n; ++j)
      for (int i = 1; i < j; ++i)
        if ((pattern >> pair_rank(i, j)) & 1) s.set(i, j, -1);
    const TripleSet t = bad_triples(s);
    PatternRecord rec;
    rec.triples = t.mask();
    rec.ell = count_p1(point_scheme(t));
    rec.f2_rank = f2_rank(anticommutation_form(mu_matrix(s)));
    out.push_back(rec);
  }
  return out;
}

std::vector<PatternRecord> sweep_patterns_parallel(int n, int jobs) {
  const std::uint64_t total = pattern_count(n);
  const TripleGeometry g = geometry(n);
  std::vector<PatternRecord> out(total);
#pragma omp parallel num_threads(effective_jobs(jobs))
  {
    std::vector<std::uint32_t> edges;
#pragma omp for schedule(static)
    for (std::int64_t p = 0; p < static_cast<std::int64_t>(total); ++p)
      out[static_cast<std::size_t>(p)] = evaluate_pattern(n, static_cast<std::uint64_t>(p), g, edges);
  }
  return out;
}

OrbitPartition orbit_partition_serial(int n) {
  const std::uint64_t total = pattern_count(n);
  std::vector<std::uint32_t> orbit_of(total);
  std::vector<std::uint64_t> canonical;
  for (std::uint64_t p = 0; p < total; ++p) {
    const std::uint64_t canon = canonical_form(TripleSet::from_mask(n, pattern_to_triples(n, p))).mask();
    auto it = std::find(canonical.begin(), canonical.end(), canon);
    if (it == canonical.end()) it = canonical.insert(canonical.end(), canon);
    orbit_of[p] = static_cast<std::uint32_t>(it - canonical.begin());
  }
  return sorted_partition(std::move(orbit_of), std::move(canonical));
}

OrbitPartition orbit_partition_parallel(int n, int jobs) {
  const std::uint64_t total = pattern_count(n);
  const std::size_t triple_count = binomial(n, 3);
  const auto perms = all_permutations(n);

  // tables[p][r]: colex rank of the image of triple r under permutation p.
  std::vector<std::vector<std::uint8_t>> tables(perms.size(), std::vector<std::uint8_t>(triple_count));
  for (std::size_t p = 0; p < perms.size(); ++p)
    for (std::size_t r = 0; r < triple_count; ++r) {
      auto t = triple_unrank(r);
      for (int& v : t) v = perms[p][static_cast<std::size_t>(v - 1)];
      std::sort(t.begin(), t.end());
      tables[p][r] = static_cast<std::uint8_t>(triple_rank(t[0], t[1], t[2]));
    }

  constexpr std::uint32_t kUnseen = ~0u;
  std::vector<std::uint32_t> orbit_of(total, kUnseen);
  std::vector<std::uint64_t> canonical;
  std::vector<std::uint64_t> images(perms.size());
  for (std::uint64_t seed = 0; seed < total; ++seed) {
    if (orbit_of[seed] != kUnseen) continue;
    const std::uint64_t mask = pattern_to_triples(n, seed);
#pragma omp parallel for num_threads(effective_jobs(jobs)) schedule(static)
    for (std::int64_t p = 0; p < static_cast<std::int64_t>(perms.size()); ++p)
      images[static_cast<std::size_t>(p)] = map_triples(mask, tables[static_cast<std::size_t>(p)]);

    const auto id = static_cast<std::uint32_t>(canonical.size());
    std::uint64_t best = mask;
    for (std::uint64_t img : images) {
      orbit_of[triples_to_pattern(n, img)] = id;
      if (encoding_less(img, best)) best = img;
    }
    canonical.push_back(best);
  }
  return sorted_partition(std::move(orbit_of), std::move(canonical));
}

}  // namespace skewq

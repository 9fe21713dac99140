#pragma once

// Exhaustive sweep kernels over gauge-fixed mu-patterns.
//
// A mu-pattern for n variables is a bitmask over the C(n-1,2) pairs i < j < n
// (colex pair rank); bit set iff eps_ij = -1, with eps_in = +1 for all i.
// Every two-graph on {1..n} arises from exactly one pattern.
//
// Each kernel exists twice: a serial reference built from the public
// per-instance API, and an OpenMP kernel on raw bitmasks. Tests require them
// to agree record for record.

#include <cstdint>
#include <vector>

namespace skewq {

// Hard ceiling for the bitmask kernels (C(8,3) = 56 triple bits).
inline constexpr int kMaxSweepN = 8;

struct PatternRecord {
  std::uint64_t triples = 0;  // bad triples, colex bitmask
  int ell = 0;
  int f2_rank = 0;

  friend bool operator==(const PatternRecord&, const PatternRecord&) = default;
};

struct OrbitPartition {
  std::vector<std::uint32_t> orbit_of;     // per pattern
  std::vector<std::uint64_t> canonical;    // per orbit, triple mask; orbits sorted by it
  std::vector<std::uint64_t> sizes;        // patterns per orbit

  friend bool operator==(const OrbitPartition&, const OrbitPartition&) = default;
};

std::uint64_t pattern_count(int n);
std::uint64_t pattern_to_triples(int n, std::uint64_t pattern);
std::uint64_t triples_to_pattern(int n, std::uint64_t triples);

// Strict "a < b" in the canonical-form order (lexicographic on the colex
// bit string, lowest rank first).
bool encoding_less(std::uint64_t a, std::uint64_t b);

std::vector<PatternRecord> sweep_patterns_serial(int n);
// jobs <= 0 uses the OpenMP default thread count.
std::vector<PatternRecord> sweep_patterns_parallel(int n, int jobs);

// canonical_form per pattern; factorial per pattern, keep to n <= 6.
OrbitPartition orbit_partition_serial(int n);
// Orbit closure under S_n, one pass of n! relabelings per orbit.
OrbitPartition orbit_partition_parallel(int n, int jobs);

// Number of worker threads a kernel will use for the given jobs request.
int effective_jobs(int jobs);

}  // namespace skewq

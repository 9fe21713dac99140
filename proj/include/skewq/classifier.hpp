#pragma once

// Stable-category labels Db(mod k^N) from the Wedderburn type of C(A), the
// ell-based prediction, and the exhaustive sweeps that check one against the
// other.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skewq/clifford.hpp"
#include "skewq/point_scheme.hpp"
#include "skewq/sign_core.hpp"

namespace skewq {

// Db(mod k^N); Morita collapse M_d(k)^c ~> k^c keeps only N = c.
struct CategoryLabel {
  std::uint64_t copies = 1;

  std::string render() const;  // "Db(mod k)", "Db(mod k^4)"
  friend auto operator<=>(const CategoryLabel&, const CategoryLabel&) = default;
};

CategoryLabel stable_category(const SignMatrix& s);

// The conjectured label from n and ell. Throws InvalidInput when ell lies
// outside 0..C(n,2).
CategoryLabel expected_from_ell(int n, int ell);

struct OrbitSummary {
  TripleSet canonical{1};
  std::uint64_t size = 0;  // mu-patterns in the orbit
  PointScheme scheme;      // of the canonical representative
  int ell = 0;
  WedderburnType type;
  CategoryLabel label;
  CategoryLabel expected;
  std::string scheme_tag;
  bool certified = false;

  friend bool operator==(const OrbitSummary&, const OrbitSummary&) = default;
};

struct HistogramKey {
  int ell = 0;
  std::uint64_t copies = 1;
  friend auto operator<=>(const HistogramKey&, const HistogramKey&) = default;
};

struct SweepReport {
  int n = 1;
  std::uint64_t total_configs = 0;
  std::map<HistogramKey, std::uint64_t> histogram;
  std::vector<OrbitSummary> orbits;
  std::vector<TripleSet> counterexamples;       // every mismatching pattern, encoding order
  std::vector<TripleSet> converse_witnesses;    // orbit representatives, E != P^{n-1} but N minimal
  std::vector<TripleSet> certification_failures;
  std::uint64_t sampled = 0;                    // patterns sent to the oracle
  std::uint64_t certified = 0;                  // of those, certified

  bool holds() const { return counterexamples.empty(); }
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

inline constexpr int kDefaultMaxSweepN = 7;

struct SweepOptions {
  int n = 5;
  int jobs = 0;              // <= 0: OpenMP default
  int sample_percent = 100;  // share of mu-patterns certified by the oracle
  bool serial = false;       // use the serial reference kernels
  int max_n = kDefaultMaxSweepN;
};

// Default oracle sample: everything for n <= 6, 10% above.
int default_sample_percent(int n);

// Sweeps all mu-patterns and compares stable_category with expected_from_ell.
// Never throws on counterexamples; they are part of the report.
SweepReport verify_conjecture(const SweepOptions& options);

// Full sweep for n in {3,4,5} with every instance certified, then asserts the
// classification theorems for that n. Throws InvariantViolation naming the
// offending triple set on any failure.
SweepReport verify_theorems(int n, int jobs = 0);

inline constexpr int kMaxCatalogN = 6;

std::vector<OrbitSummary> catalog(int n);

// Indices of mu-patterns chosen for certification: ceil(total * percent / 100)
// distinct indices from a fixed-seed shuffle, returned ascending.
std::vector<std::uint64_t> certification_sample(std::uint64_t total, int percent);

}  // namespace skewq

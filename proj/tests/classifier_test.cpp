#include <gtest/gtest.h>

#include <limits>
#include <set>

#include "oracles.hpp"
#include "skewq/classifier.hpp"
#include "skewq/oracle.hpp"
#include "skewq/errors.hpp"
#include "skewq/sweep.hpp"

namespace skewq {
namespace {

struct SixExample {
  std::vector<Pair> neg;
  int ell;
  WedderburnType type;
  std::set<std::vector<int>> components;
};

const std::vector<SixExample>& six_examples() {
  static const std::vector<SixExample> ex{
      {{{1, 3}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}},
       1,
       {4, 2},
       {{3, 4, 5}, {2, 3, 4}, {1, 4, 5}, {1, 2, 5}, {1, 2, 3}, {3, 4, 6}, {1, 4, 6}, {1, 2, 6}, {5, 6}}},
      {{{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}},
       1,
       {4, 2},
       {{2, 3, 4, 5}, {1, 2, 4, 5}, {2, 3, 6}, {1, 2, 6}, {4, 5, 6}, {1, 3}}},
      {{{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}},
       4,
       {2, 8},
       {{2, 3, 5}, {2, 3, 4}, {1, 2, 5}, {1, 2, 4}, {1, 2, 6}, {2, 3, 6}, {4, 5}, {1, 3}, {4, 6}, {5, 6}}},
      {{{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}},
       6,
       {2, 8},
       {{1, 2, 5}, {1, 2, 4}, {1, 2, 3}, {1, 2, 6}, {4, 5}, {3, 5}, {3, 4}, {4, 6}, {3, 6}, {5, 6}}},
  };
  return ex;
}

// Conjectured exponent straight from the interval description, scanning all
// m so that uniqueness is checked too. C(-1,2) and (for even n) C(0,2) are -inf.
std::uint64_t conjectured_copies(int n, int ell) {
  auto c2 = [](int x) { return static_cast<long long>(x) * (x - 1) / 2; };
  const long long inf = std::numeric_limits<long long>::min();
  int found = -1;
  for (int m = 0; m <= n; ++m) {
    long long lo, hi;
    if (n % 2 == 1) {
      lo = m == 0 ? inf : c2(2 * m - 1);
      hi = c2(2 * m + 1);
    } else {
      lo = m == 0 ? inf : c2(2 * m);
      hi = c2(2 * m + 2);
    }
    if (lo < ell && ell <= hi) {
      EXPECT_EQ(found, -1) << "two intervals cover n=" << n << " ell=" << ell;
      found = m;
    }
  }
  EXPECT_GE(found, 0);
  return std::uint64_t{1} << (n % 2 == 1 ? 2 * found : 2 * found + 1);
}

TEST(StableCategory, Examples) {
  EXPECT_EQ(stable_category(SignMatrix(1)).copies, 1u);
  EXPECT_EQ(stable_category(SignMatrix(1)).render(), "Db(mod k)");
  const Pair neg[] = {{1, 3}, {2, 3}};
  EXPECT_EQ(stable_category(SignMatrix::from_neg_pairs(4, neg)).copies, 2u);
  const Pair all[] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  auto c = stable_category(SignMatrix::from_neg_pairs(5, all));
  EXPECT_EQ(c.copies, 16u);
  EXPECT_EQ(c.render(), "Db(mod k^16)");
}

TEST(Expected, Examples) {
  EXPECT_EQ(expected_from_ell(5, 0).copies, 1u);
  EXPECT_EQ(expected_from_ell(5, 2).copies, 4u);
  EXPECT_EQ(expected_from_ell(5, 7).copies, 16u);
  EXPECT_EQ(expected_from_ell(6, 4).copies, 8u);
  EXPECT_EQ(expected_from_ell(2, 1).copies, 2u);
  EXPECT_EQ(expected_from_ell(1, 0).copies, 1u);
}

TEST(Expected, MatchesIntervalsEverywhere) {
  for (int n = 1; n <= 16; ++n)
    for (int ell = 0; ell <= static_cast<int>(binomial(n, 2)); ++ell)
      ASSERT_EQ(expected_from_ell(n, ell).copies, conjectured_copies(n, ell)) << n << " " << ell;
}

TEST(Expected, OutOfRange) {
  EXPECT_THROW(expected_from_ell(5, -1), InvalidInput);
  EXPECT_THROW(expected_from_ell(5, 11), InvalidInput);
  EXPECT_THROW(expected_from_ell(0, 0), InvalidInput);
}

TEST(SixVariables, ReferenceMatrices) {
  for (const auto& ex : six_examples()) {
    auto s = SignMatrix::from_neg_pairs(6, ex.neg);
    auto t = bad_triples(s);
    auto ps = point_scheme(t);
    std::set<std::vector<int>> comps;
    for (auto c : ps.components) comps.insert(c.members());
    EXPECT_EQ(comps, ex.components);
    EXPECT_EQ(count_p1(ps), ex.ell);
    auto mu = mu_matrix(s);
    EXPECT_EQ(wedderburn_type(anticommutation_form(mu)), ex.type);
    EXPECT_TRUE(certify(mu).granted());
    EXPECT_EQ(stable_category(s).copies, ex.type.block_count);
    EXPECT_EQ(expected_from_ell(6, ex.ell), stable_category(s));
  }
}

TEST(Gauge, PatternsReachEveryTwoGraph) {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> from_eps, from_patterns;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << binomial(n, 2)); ++w)
      from_eps.insert(bad_triples(testing::sign_matrix_from_word(n, w)).mask());
    for (std::uint64_t p = 0; p < pattern_count(n); ++p) from_patterns.insert(pattern_to_triples(n, p));
    EXPECT_EQ(from_eps, from_patterns) << n;
    EXPECT_EQ(from_patterns.size(), pattern_count(n));
  }
}

TEST(Theorems, ThreeVariables) {
  auto r = verify_theorems(3);
  EXPECT_EQ(r.total_configs, 2u);
  EXPECT_EQ(r.histogram, (std::map<HistogramKey, std::uint64_t>{{{0, 1}, 1}, {{3, 4}, 1}}));
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.orbits.size(), 2u);
}

TEST(Theorems, FourVariables) {
  auto r = verify_theorems(4);
  EXPECT_EQ(r.total_configs, 8u);
  std::set<HistogramKey> allowed{{0, 2}, {1, 2}, {6, 8}};
  for (auto& [k, v] : r.histogram) EXPECT_TRUE(allowed.count(k)) << k.ell << "," << k.copies;
  std::set<std::string> tags;
  for (auto& o : r.orbits) tags.insert(o.scheme_tag);
  EXPECT_EQ(tags, (std::set<std::string>{"(4a)", "(4b)", "(4c)"}));
  EXPECT_TRUE(r.holds());
}

TEST(Theorems, FiveVariables) {
  auto r = verify_theorems(5);
  EXPECT_EQ(r.total_configs, 64u);
  EXPECT_EQ(r.orbits.size(), 7u);
  EXPECT_EQ(r.certified, 64u);
  for (auto& [k, v] : r.histogram) {
    if (k.ell == 0) EXPECT_EQ(k.copies, 1u);
    else if (k.ell <= 3) EXPECT_EQ(k.copies, 4u);
    else EXPECT_EQ(k.copies, 16u);
  }
  std::set<std::string> witnesses;
  for (auto& w : r.converse_witnesses) witnesses.insert(scheme_label(point_scheme(w)));
  EXPECT_EQ(witnesses, (std::set<std::string>{"(5c)", "(5d)"}));
}

TEST(Theorems, OtherSizesRejected) {
  EXPECT_THROW(verify_theorems(2), InvalidInput);
  EXPECT_THROW(verify_theorems(6), InvalidInput);
}

TEST(Catalog, OrbitCounts) {
  EXPECT_EQ(catalog(1).size(), 1u);
  EXPECT_EQ(catalog(2).size(), 1u);
  EXPECT_EQ(catalog(3).size(), 2u);
  EXPECT_EQ(catalog(4).size(), 3u);
  auto five = catalog(5);
  ASSERT_EQ(five.size(), 7u);
  std::set<std::string> tags;
  for (auto& o : five) tags.insert(o.scheme_tag);
  EXPECT_EQ(tags, (std::set<std::string>{"(5a)", "(5b)", "(5c)", "(5d)", "(5e)", "(5f)", "(5g)"}));
  std::uint64_t total = 0;
  for (auto& o : catalog(6)) {
    total += o.size;
    EXPECT_EQ(canonical_form(o.canonical), o.canonical);
  }
  EXPECT_EQ(total, 1024u);
  EXPECT_THROW(catalog(7), GuardViolation);
}

TEST(Catalog, ThreeVariableSchemes) {
  auto c = catalog(3);
  std::set<std::string> schemes;
  for (auto& o : c) schemes.insert(render(o.scheme));
  EXPECT_EQ(schemes, (std::set<std::string>{"P(1,2,3)", "P(1,2) u P(1,3) u P(2,3)"}));
}

TEST(Conjecture, HoldsUpToFive) {
  for (int n = 2; n <= 5; ++n) {
    SweepOptions o;
    o.n = n;
    auto r = verify_conjecture(o);
    EXPECT_TRUE(r.holds()) << n;
    EXPECT_EQ(r.certified, r.total_configs);
    std::uint64_t sum = 0;
    for (auto& [k, v] : r.histogram) sum += v;
    EXPECT_EQ(sum, r.total_configs);
  }
}

TEST(Conjecture, GeneralTheoremEndpoints) {
  for (int n = 3; n <= 6; ++n) {
    SweepOptions o;
    o.n = n;
    o.sample_percent = 0;
    auto r = verify_conjecture(o);
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    for (auto& orb : r.orbits) {
      if (orb.canonical.empty()) EXPECT_EQ(orb.label.copies, n % 2 == 1 ? 1u : 2u);
      const bool all_bad = orb.canonical.size() == binomial(n, 3);
      EXPECT_EQ(orb.label.copies == top, all_bad) << to_string(orb.canonical);
    }
  }
}

TEST(Conjecture, SixVariableSweepContainsExamples) {
  SweepOptions o;
  o.n = 6;
  auto r = verify_conjecture(o);
  EXPECT_EQ(r.total_configs, 1024u);
  EXPECT_EQ(r.certified, 1024u);
  EXPECT_TRUE(r.certification_failures.empty());
  for (const auto& ex : six_examples()) {
    auto t = canonical_form(bad_triples(SignMatrix::from_neg_pairs(6, ex.neg)));
    bool seen = false;
    for (auto& orb : r.orbits)
      if (orb.canonical == t) {
        seen = true;
        EXPECT_EQ(orb.ell, ex.ell);
        EXPECT_EQ(orb.type, ex.type);
      }
    EXPECT_TRUE(seen);
    EXPECT_TRUE(r.histogram.count({ex.ell, ex.type.block_count}));
  }
}

TEST(Conjecture, DeterministicAcrossJobsAndKernels) {
  for (int n = 4; n <= 6; ++n) {
    SweepOptions o;
    o.n = n;
    o.jobs = 1;
    auto one = verify_conjecture(o);
    o.jobs = 3;
    EXPECT_EQ(verify_conjecture(o), one);
    o.serial = true;
    EXPECT_EQ(verify_conjecture(o), one);
  }
}

TEST(Conjecture, Guard) {
  SweepOptions o;
  o.n = 8;
  EXPECT_THROW(verify_conjecture(o), GuardViolation);
  o.n = 0;
  EXPECT_THROW(verify_conjecture(o), InvalidInput);
}

TEST(Sample, SizeOrderAndDeterminism) {
  auto a = certification_sample(32768, 10);
  EXPECT_EQ(a.size(), 3277u);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_EQ(std::set<std::uint64_t>(a.begin(), a.end()).size(), a.size());
  EXPECT_EQ(certification_sample(32768, 10), a);
  EXPECT_EQ(certification_sample(64, 100).size(), 64u);
  EXPECT_EQ(certification_sample(64, 1).size(), 1u);
  EXPECT_TRUE(certification_sample(64, 0).empty());
  EXPECT_THROW(certification_sample(64, 101), InvalidInput);
  EXPECT_EQ(default_sample_percent(6), 100);
  EXPECT_EQ(default_sample_percent(7), 10);
}

}  // namespace
}  // namespace skewq

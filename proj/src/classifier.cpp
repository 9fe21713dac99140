#include "skewq/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "skewq/errors.hpp"
#include "skewq/oracle.hpp"
#include "skewq/sweep.hpp"

namespace skewq {

std::string CategoryLabel::render() const {
  return copies == 1 ? "Db(mod k)" : "Db(mod k^" + std::to_string(copies) + ")";
}

CategoryLabel stable_category(const SignMatrix& s) {
  return {wedderburn_type(anticommutation_form(mu_matrix(s))).block_count};
}

CategoryLabel expected_from_ell(int n, int ell) {
  if (n < 1) throw InvalidInput("n must be positive");
  const auto max_ell = static_cast<int>(binomial(n, 2));
  if (ell < 0 || ell > max_ell) {
    throw InvalidInput("ell = " + std::to_string(ell) + " outside 0.." + std::to_string(max_ell) +
                       " for n = " + std::to_string(n));
  }
  // Intervals (C(2m-1,2), C(2m+1,2)] for odd n and (C(2m,2), C(2m+2,2)] for
  // even n; the lower end of the m = 0 interval is -infinity.
  const int shift = (n % 2 == 1) ? 1 : 2;
  for (int m = 0;; ++m) {
    const auto upper = static_cast<int>(binomial(2 * m + shift, 2));
    if (ell <= upper) {
      const int exponent = (n % 2 == 1) ? 2 * m : 2 * m + 1;
      return {std::uint64_t{1} << exponent};
    }
  }
}

int default_sample_percent(int n) { return n <= 6 ? 100 : 10; }

std::vector<std::uint64_t> certification_sample(std::uint64_t total, int percent) {
  if (percent < 0 || percent > 100) throw InvalidInput("sample percent must be in 0..100");
  const std::uint64_t want = (total * static_cast<std::uint64_t>(percent) + 99) / 100;
  std::vector<std::uint64_t> idx(total);
  std::iota(idx.begin(), idx.end(), std::uint64_t{0});
  if (want < total) {
    std::uint64_t state = 0x5eed5eed5eed5eedULL;
    auto next = [&state] {
      // splitmix64
      std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    };
    for (std::uint64_t i = 0; i < want; ++i) std::swap(idx[i], idx[i + next() % (total - i)]);
    idx.resize(want);
    std::sort(idx.begin(), idx.end());
  }
  return idx;
}

namespace {

OrbitSummary summarize(const TripleSet& canonical, std::uint64_t size) {
  OrbitSummary o;
  o.canonical = canonical;
  o.size = size;
  o.scheme = point_scheme(canonical);
  o.ell = count_p1(o.scheme);
  const CommutationMatrix mu = mu_matrix(canonical);
  o.type = wedderburn_type(anticommutation_form(mu));
  o.label = {o.type.block_count};
  o.expected = expected_from_ell(canonical.n(), o.ell);
  o.scheme_tag = scheme_label(o.scheme);
  o.certified = mu.m() <= kMaxOracleGenerators && certify(mu).granted();
  return o;
}

std::uint64_t minimal_copies(int n) { return n % 2 == 1 ? 1 : 2; }

}  // namespace

SweepReport verify_conjecture(const SweepOptions& options) {
  const int n = options.n;
  if (n < 1) throw InvalidInput("n must be positive");
  if (n > options.max_n || n > kMaxSweepN) {
    throw GuardViolation("sweep for n = " + std::to_string(n) + " exceeds the guard n <= " +
                         std::to_string(std::min(options.max_n, kMaxSweepN)));
  }
  const int m = n - 1;
  const auto records =
      options.serial ? sweep_patterns_serial(n) : sweep_patterns_parallel(n, options.jobs);
  const auto partition =
      options.serial ? orbit_partition_serial(n) : orbit_partition_parallel(n, options.jobs);

  SweepReport report;
  report.n = n;
  report.total_configs = records.size();

  std::vector<std::uint64_t> counter_masks;
  for (const auto& rec : records) {
    const CategoryLabel label{std::uint64_t{1} << (m - rec.f2_rank)};
    ++report.histogram[{rec.ell, label.copies}];
    if (label != expected_from_ell(n, rec.ell)) counter_masks.push_back(rec.triples);
  }
  std::sort(counter_masks.begin(), counter_masks.end(), encoding_less);
  for (auto mask : counter_masks) report.counterexamples.push_back(TripleSet::from_mask(n, mask));

  for (std::size_t k = 0; k < partition.canonical.size(); ++k)
    report.orbits.push_back(
        summarize(TripleSet::from_mask(n, partition.canonical[k]), partition.sizes[k]));

  // Scheme and algebra are permutation invariant, so every pattern must agree
  // with its orbit representative.
  for (std::size_t p = 0; p < records.size(); ++p) {
    const auto& orbit = report.orbits[partition.orbit_of[p]];
    if (records[p].ell != orbit.ell ||
        (std::uint64_t{1} << (m - records[p].f2_rank)) != orbit.label.copies) {
      throw InvariantViolation("pattern " + to_string(TripleSet::from_mask(n, records[p].triples)) +
                               " disagrees with its orbit representative " +
                               to_string(orbit.canonical));
    }
  }

  for (const auto& orbit : report.orbits)
    if (!orbit.canonical.empty() && orbit.label.copies == minimal_copies(n))
      report.converse_witnesses.push_back(orbit.canonical);

  if (m <= kMaxOracleGenerators) {
    const auto sample = certification_sample(records.size(), options.sample_percent);
    std::vector<char> granted(sample.size(), 0);
#pragma omp parallel for num_threads(effective_jobs(options.serial ? 1 : options.jobs)) schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(sample.size()); ++i)
      granted[static_cast<std::size_t>(i)] =
          certify(CommutationMatrix::from_neg_mask(m, sample[static_cast<std::size_t>(i)])).granted();
    report.sampled = sample.size();
    for (std::size_t i = 0; i < sample.size(); ++i) {
      if (granted[i]) ++report.certified;
      else report.certification_failures.push_back(TripleSet::from_mask(n, records[sample[i]].triples));
    }
  }
  return report;
}

namespace {

[[noreturn]] void fail(int n, const std::string& what, const TripleSet& where) {
  throw InvariantViolation("n = " + std::to_string(n) + ": " + what + " at bad triples " +
                           to_string(where));
}

// The classification for n <= 5 written out interval by interval.
std::uint64_t theorem_copies(int n, int ell) {
  if (n % 2 == 1) {
    if (ell == 0) return 1;
    if (ell <= 3) return 4;
    return 16;
  }
  return ell <= 1 ? 2 : 8;
}

}  // namespace

SweepReport verify_theorems(int n, int jobs) {
  if (n < 3 || n > 5) throw InvalidInput("verify_theorems covers n = 3, 4, 5");
  SweepReport report = verify_conjecture({.n = n, .jobs = jobs, .sample_percent = 100});

  if (!report.certification_failures.empty())
    fail(n, "oracle refused certification", report.certification_failures.front());
  if (report.certified != report.total_configs) {
    throw InvariantViolation("n = " + std::to_string(n) + ": only " +
                             std::to_string(report.certified) + " of " +
                             std::to_string(report.total_configs) + " instances certified");
  }
  if (!report.holds()) fail(n, "label differs from the ell prediction", report.counterexamples.front());

  const std::size_t triple_total = binomial(n, 3);
  for (const auto& o : report.orbits) {
    if (o.ell > (n % 2 == 1 ? 10 : 6)) fail(n, "ell above the theorem's bound", o.canonical);
    if (o.label.copies != theorem_copies(n, o.ell))
      fail(n, "label outside the theorem's ell range", o.canonical);
    if (!o.certified) fail(n, "orbit representative not certified", o.canonical);
    if (o.canonical.empty() && o.label.copies != minimal_copies(n))
      fail(n, "E = P^{n-1} without the commutative label", o.canonical);
    const bool everything_bad = o.canonical.size() == triple_total;
    if (everything_bad != (o.label.copies == (std::uint64_t{1} << (n - 1))))
      fail(n, "Db(mod k^{2^{n-1}}) does not single out the all-bad two-graph", o.canonical);
  }

  std::set<std::string> tags;
  for (const auto& o : report.orbits) tags.insert(o.scheme_tag);

  if (n == 3) {
    if (report.orbits.size() != 2) throw InvariantViolation("n = 3: expected 2 orbit classes");
    for (const auto& o : report.orbits) {
      const bool plane = o.scheme.components.size() == 1 && o.scheme.components[0].size() == 3;
      const bool lines = o.scheme.components.size() == 3 &&
                         std::all_of(o.scheme.components.begin(), o.scheme.components.end(),
                                     [](IndexSet c) { return c.size() == 2; });
      if (!plane && !lines) fail(n, "scheme is neither P^2 nor three lines", o.canonical);
      if (plane != (o.label.copies == 1) || lines != (o.label.copies == 4))
        fail(n, "scheme/label biconditional broken", o.canonical);
    }
  } else if (n == 4) {
    if (report.orbits.size() != 3) throw InvariantViolation("n = 4: expected 3 orbit classes");
    if (tags != std::set<std::string>{"(4a)", "(4b)", "(4c)"})
      throw InvariantViolation("n = 4: orbit schemes are not (4a), (4b), (4c)");
    const PointScheme excluded{4, {IndexSet::of({2, 3, 4}), IndexSet::of({1, 4}), IndexSet::of({1, 3}),
                                   IndexSet::of({1, 2})}};
    const auto excluded_canon = canonical_components(excluded);
    for (const auto& o : report.orbits) {
      if (canonical_components(o.scheme) == excluded_canon)
        fail(n, "scheme P(2,3,4) u P(1,4) u P(1,3) u P(1,2) occurred", o.canonical);
      const bool small = o.scheme_tag == "(4a)" || o.scheme_tag == "(4b)";
      if (small != (o.label.copies == 2) || (o.scheme_tag == "(4c)") != (o.label.copies == 8))
        fail(n, "scheme/label biconditional broken", o.canonical);
    }
  } else {
    if (report.orbits.size() != 7) throw InvariantViolation("n = 5: expected 7 orbit classes");
    if (tags != std::set<std::string>{"(5a)", "(5b)", "(5c)", "(5d)", "(5e)", "(5f)", "(5g)"})
      throw InvariantViolation("n = 5: orbit schemes are not (5a)..(5g)");
    const std::map<std::string, std::uint64_t> table = {{"(5a)", 1}, {"(5c)", 1}, {"(5d)", 1},
                                                        {"(5b)", 4}, {"(5e)", 4}, {"(5f)", 4},
                                                        {"(5g)", 16}};
    for (const auto& o : report.orbits)
      if (table.at(o.scheme_tag) != o.label.copies)
        fail(n, "scheme/label biconditional broken for " + o.scheme_tag, o.canonical);
  }
  return report;
}

std::vector<OrbitSummary> catalog(int n) {
  if (n < 1 || n > kMaxCatalogN)
    throw GuardViolation("catalog is limited to 1 <= n <= " + std::to_string(kMaxCatalogN));
  return verify_conjecture({.n = n, .sample_percent = 0}).orbits;
}

}  // namespace skewq

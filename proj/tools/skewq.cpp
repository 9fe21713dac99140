// skewq: point schemes, C(A) decompositions and stable-category labels for
// quadrics x_1^2 + ... + x_n^2 in (+-1)-skew polynomial algebras.
//
// Exit codes: 0 ok, 2 bad input or flags, 3 invariant violation,
// 4 sweep found counterexamples to the ell prediction.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skewq/errors.hpp"
#include "skewq/oracle.hpp"
#include "skewq/report.hpp"
#include "skewq/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitCounterexample = 4;

int sweep_guard() {
  const char* env = std::getenv("SKEWQ_MAX_N");
  if (env == nullptr) return skewq::kDefaultMaxSweepN;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw skewq::InvalidInput(std::string("SKEWQ_MAX_N is not an integer: ") + env);
  }
}

int run_analyze(const std::string& path, bool json, bool no_oracle) {
  std::ifstream in(path);
  if (!in) throw skewq::InvalidInput("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const skewq::InputSpec spec = skewq::parse_input(buf.str());
  const skewq::AnalysisReport report = skewq::analyze(spec, !no_oracle);
  if (json) std::cout << skewq::to_json(report).dump(2) << '\n';
  else std::cout << skewq::render_text(report);
  // Above the oracle's range the report says so, but nothing was refuted.
  const bool in_range = spec.n - 1 <= skewq::kMaxOracleGenerators;
  const bool failed = !no_oracle && in_range && !report.oracle_certified;
  return failed ? kExitInvariant : kExitOk;
}

int run_sweep(int n, int jobs, int sample, bool json) {
  const int guard = std::min(sweep_guard(), skewq::kMaxSweepN);
  if (n < 2 || n > guard) {
    throw skewq::InvalidInput("--n must be in 2.." + std::to_string(guard) +
                              " (SKEWQ_MAX_N raises the guard up to " +
                              std::to_string(skewq::kMaxSweepN) + ")");
  }
  skewq::SweepOptions opts;
  opts.n = n;
  opts.jobs = jobs;
  opts.sample_percent = sample >= 0 ? sample : skewq::default_sample_percent(n);
  opts.max_n = guard;
  const skewq::SweepReport report = skewq::verify_conjecture(opts);
  if (json) std::cout << skewq::to_json(report).dump(2) << '\n';
  else std::cout << skewq::render_text(report);
  if (!report.certification_failures.empty()) return kExitInvariant;
  return report.holds() ? kExitOk : kExitCounterexample;
}

int run_catalog(int n, bool json) {
  if (n < 1 || n > skewq::kMaxCatalogN)
    throw skewq::InvalidInput("--n must be in 1.." + std::to_string(skewq::kMaxCatalogN));
  const auto orbits = skewq::catalog(n);
  if (json) std::cout << skewq::to_json(orbits).dump(2) << '\n';
  else std::cout << skewq::render_catalog(n, orbits);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skewq: stable categories of quadrics in (+-1)-skew projective spaces"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  bool no_oracle = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze one sign matrix given as a JSON file");
  analyze->add_option("file", path, "{\"n\": int, \"neg_pairs\": [[i,j],...]}")->required();
  analyze->add_flag("--json", json, "Emit JSON");
  analyze->add_flag("--no-oracle", no_oracle, "Skip brute-force certification");

  int n = 0;
  int jobs = 0;
  int sample = -1;
  auto* sweep = app.add_subcommand("sweep", "Check the ell prediction over every sign pattern");
  sweep->add_option("--n", n, "Number of variables")->required();
  sweep->add_option("--jobs", jobs, "Worker threads (default: OpenMP default)")->check(CLI::NonNegativeNumber);
  sweep->add_option("--sample-certify", sample, "Percent of patterns certified by the oracle")
      ->check(CLI::Range(0, 100));
  sweep->add_flag("--json", json, "Emit JSON");

  auto* cat = app.add_subcommand("catalog", "List orbit classes of two-graphs with their labels");
  cat->add_option("--n", n, "Number of variables")->required();
  cat->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) return run_analyze(path, json, no_oracle);
    if (*sweep) return run_sweep(n, jobs, sample, json);
    return run_catalog(n, json);
  } catch (const skewq::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const skewq::GuardViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const skewq::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  }
}

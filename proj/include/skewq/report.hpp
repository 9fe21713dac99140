#pragma once

// Input parsing and report rendering for the command-line front end.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>
#include "skewq/classifier.hpp"

namespace skewq {

// {"n": int, "neg_pairs": [[i,j], ...]} with 1 <= i < j <= n, no duplicates.
struct InputSpec {
  int n = 1;
  std::vector<Pair> neg_pairs;
};

// Throws InvalidInput with a line/column or field diagnostic.
InputSpec parse_input(const std::string& text);

struct AnalysisReport {
  int n = 1;
  std::vector<Pair> neg_pairs;
  std::vector<Triple> bad_triples;
  std::vector<std::vector<int>> components;
  int ell = 0;
  std::vector<Pair> mu_neg_pairs;
  WedderburnType wedderburn;
  std::string category;
  bool oracle_certified = false;
  std::string oracle_failure;  // empty unless certification ran and failed
  std::uint64_t conjecture_expected_n = 1;
  bool conjecture_match = false;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const InputSpec& input, bool run_oracle);

nlohmann::ordered_json to_json(const AnalysisReport& r);
AnalysisReport analysis_from_json(const nlohmann::ordered_json& j);
std::string render_text(const AnalysisReport& r);

nlohmann::ordered_json to_json(const SweepReport& r);
SweepReport sweep_from_json(const nlohmann::ordered_json& j);
std::string render_text(const SweepReport& r);

nlohmann::ordered_json to_json(const std::vector<OrbitSummary>& orbits);
std::string render_catalog(int n, const std::vector<OrbitSummary>& orbits);

}  // namespace skewq

#include "skewq/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "skewq/errors.hpp"
#include "skewq/oracle.hpp"

namespace skewq {

using nlohmann::ordered_json;

namespace {

int field_int(const ordered_json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InvalidInput(where + ": expected an integer");
  return j.get<int>();
}

}  // namespace

InputSpec parse_input(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("input must be a JSON object with keys \"n\" and \"neg_pairs\"");
  for (const auto& [key, _] : j.items())
    if (key != "n" && key != "neg_pairs") throw InvalidInput("unknown field \"" + key + "\"");
  if (!j.contains("n")) throw InvalidInput("missing field \"n\"");

  InputSpec spec;
  spec.n = field_int(j["n"], "field \"n\"");
  if (spec.n < 1 || spec.n > kMaxVariables)
    throw InvalidInput("field \"n\": must be in 1.." + std::to_string(kMaxVariables));

  if (j.contains("neg_pairs")) {
    const auto& pairs = j["neg_pairs"];
    if (!pairs.is_array()) throw InvalidInput("field \"neg_pairs\": expected an array of [i,j] pairs");
    std::set<Pair> seen;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const std::string where = "neg_pairs[" + std::to_string(k) + "]";
      const auto& p = pairs[k];
      if (!p.is_array() || p.size() != 2) throw InvalidInput(where + ": expected [i,j]");
      const int i = field_int(p[0], where + "[0]");
      const int jj = field_int(p[1], where + "[1]");
      if (i < 1 || jj > spec.n || i >= jj)
        throw InvalidInput(where + ": need 1 <= i < j <= n, got [" + std::to_string(i) + "," +
                           std::to_string(jj) + "]");
      if (!seen.insert({i, jj}).second) throw InvalidInput(where + ": duplicate pair");
      spec.neg_pairs.push_back({i, jj});
    }
  }
  return spec;
}

AnalysisReport analyze(const InputSpec& input, bool run_oracle) {
  const SignMatrix s = SignMatrix::from_neg_pairs(input.n, input.neg_pairs);
  const TripleSet bad = bad_triples(s);
  const PointScheme ps = point_scheme(bad);
  const CommutationMatrix mu = mu_matrix(s);

  AnalysisReport r;
  r.n = input.n;
  r.neg_pairs = s.neg_pairs();
  r.bad_triples = bad.triples();
  for (IndexSet c : ps.components) r.components.push_back(c.members());
  r.ell = count_p1(ps);
  r.mu_neg_pairs = mu.neg_pairs();
  r.wedderburn = wedderburn_type(anticommutation_form(mu));
  const CategoryLabel label{r.wedderburn.block_count};
  r.category = label.render();
  if (run_oracle) {
    if (mu.m() > kMaxOracleGenerators) {
      r.oracle_failure = "oracle limited to n <= " + std::to_string(kMaxOracleGenerators + 1);
    } else {
      const Certificate cert = certify(mu);
      r.oracle_certified = cert.granted();
      r.oracle_failure = cert.failures();
    }
  }
  const CategoryLabel expected = expected_from_ell(r.n, r.ell);
  r.conjecture_expected_n = expected.copies;
  r.conjecture_match = expected == label;
  return r;
}

ordered_json to_json(const AnalysisReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["neg_pairs"] = r.neg_pairs;
  j["bad_triples"] = r.bad_triples;
  j["components"] = r.components;
  j["ell"] = r.ell;
  j["mu_neg_pairs"] = r.mu_neg_pairs;
  j["wedderburn"] = {{"d", r.wedderburn.block_size}, {"c", r.wedderburn.block_count}};
  j["category"] = r.category;
  j["oracle_certified"] = r.oracle_certified;
  if (!r.oracle_failure.empty()) j["oracle_failure"] = r.oracle_failure;
  j["conjecture_expected_N"] = r.conjecture_expected_n;
  j["conjecture_match"] = r.conjecture_match;
  return j;
}

AnalysisReport analysis_from_json(const ordered_json& j) {
  AnalysisReport r;
  r.n = j.at("n").get<int>();
  r.neg_pairs = j.at("neg_pairs").get<std::vector<Pair>>();
  r.bad_triples = j.at("bad_triples").get<std::vector<Triple>>();
  r.components = j.at("components").get<std::vector<std::vector<int>>>();
  r.ell = j.at("ell").get<int>();
  r.mu_neg_pairs = j.at("mu_neg_pairs").get<std::vector<Pair>>();
  r.wedderburn = {j.at("wedderburn").at("d").get<std::uint64_t>(),
                  j.at("wedderburn").at("c").get<std::uint64_t>()};
  r.category = j.at("category").get<std::string>();
  r.oracle_certified = j.at("oracle_certified").get<bool>();
  r.oracle_failure = j.value("oracle_failure", std::string{});
  r.conjecture_expected_n = j.at("conjecture_expected_N").get<std::uint64_t>();
  r.conjecture_match = j.at("conjecture_match").get<bool>();
  return r;
}

namespace {

template <typename Seq>
std::string bracket_list(const Seq& items) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& it : items) {
    if (!first) os << ' ';
    os << '[';
    for (std::size_t k = 0; k < it.size(); ++k) os << (k ? "," : "") << it[k];
    os << ']';
    first = false;
  }
  os << ']';
  return os.str();
}

std::string render_components(const std::vector<std::vector<int>>& comps) {
  std::string s;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (c) s += " u ";
    s += "P(";
    for (std::size_t k = 0; k < comps[c].size(); ++k) s += (k ? "," : "") + std::to_string(comps[c][k]);
    s += ")";
  }
  return s;
}

}  // namespace

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "n                : " << r.n << '\n'
     << "negative pairs   : " << bracket_list(r.neg_pairs) << '\n'
     << "bad triples      : " << bracket_list(r.bad_triples) << '\n'
     << "point scheme     : " << render_components(r.components) << '\n'
     << "ell (P^1 count)  : " << r.ell << '\n'
     << "mu = -1 pairs    : " << bracket_list(r.mu_neg_pairs) << '\n'
     << "C(A)             : " << r.wedderburn.render() << '\n'
     << "stable category  : " << r.category << '\n'
     << "oracle           : "
     << (r.oracle_certified ? "certified" : r.oracle_failure.empty() ? "skipped" : "FAILED: " + r.oracle_failure)
     << '\n'
     << "ell prediction   : " << CategoryLabel{r.conjecture_expected_n}.render()
     << (r.conjecture_match ? " (match)" : " (MISMATCH)") << '\n';
  return os.str();
}

namespace {

ordered_json orbit_json(const OrbitSummary& o) {
  ordered_json j;
  j["canonical_triples"] = o.canonical.triples();
  j["size"] = o.size;
  std::vector<std::vector<int>> comps;
  for (IndexSet c : o.scheme.components) comps.push_back(c.members());
  j["components"] = comps;
  j["ell"] = o.ell;
  j["d"] = o.type.block_size;
  j["c"] = o.type.block_count;
  j["N"] = o.label.copies;
  j["expected_N"] = o.expected.copies;
  j["label"] = o.scheme_tag;
  j["certified"] = o.certified;
  return j;
}

OrbitSummary orbit_from_json(int n, const ordered_json& j) {
  OrbitSummary o;
  const auto triples = j.at("canonical_triples").get<std::vector<Triple>>();
  o.canonical = TripleSet(n, triples);
  o.size = j.at("size").get<std::uint64_t>();
  o.scheme.n = n;
  for (const auto& c : j.at("components")) {
    std::uint32_t bits = 0;
    for (int i : c.get<std::vector<int>>()) bits |= 1u << (i - 1);
    o.scheme.components.emplace_back(bits);
  }
  o.ell = j.at("ell").get<int>();
  o.type = {j.at("d").get<std::uint64_t>(), j.at("c").get<std::uint64_t>()};
  o.label = {j.at("N").get<std::uint64_t>()};
  o.expected = {j.at("expected_N").get<std::uint64_t>()};
  o.scheme_tag = j.at("label").get<std::string>();
  o.certified = j.at("certified").get<bool>();
  return o;
}

ordered_json triple_lists(const std::vector<TripleSet>& sets) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : sets) arr.push_back(t.triples());
  return arr;
}

std::vector<TripleSet> triple_sets_from(int n, const ordered_json& arr) {
  std::vector<TripleSet> out;
  for (const auto& t : arr) {
    const auto triples = t.get<std::vector<Triple>>();
    out.emplace_back(n, triples);
  }
  return out;
}

}  // namespace

ordered_json to_json(const SweepReport& r) {
  ordered_json j;
  j["n"] = r.n;
  ordered_json hist = ordered_json::array();
  for (const auto& [key, count] : r.histogram)
    hist.push_back({{"ell", key.ell}, {"N", key.copies}, {"count", count}});
  j["histogram"] = hist;
  j["verdict"] = r.holds() ? "holds" : "counterexamples";
  j["counterexamples"] = triple_lists(r.counterexamples);
  ordered_json orbits = ordered_json::array();
  for (const auto& o : r.orbits) orbits.push_back(orbit_json(o));
  j["orbits"] = orbits;
  j["total_configs"] = r.total_configs;
  j["sampled"] = r.sampled;
  j["certified"] = r.certified;
  j["certification_failures"] = triple_lists(r.certification_failures);
  j["converse_witnesses"] = triple_lists(r.converse_witnesses);
  return j;
}

SweepReport sweep_from_json(const ordered_json& j) {
  SweepReport r;
  r.n = j.at("n").get<int>();
  for (const auto& h : j.at("histogram"))
    r.histogram[{h.at("ell").get<int>(), h.at("N").get<std::uint64_t>()}] = h.at("count").get<std::uint64_t>();
  r.counterexamples = triple_sets_from(r.n, j.at("counterexamples"));
  for (const auto& o : j.at("orbits")) r.orbits.push_back(orbit_from_json(r.n, o));
  r.total_configs = j.at("total_configs").get<std::uint64_t>();
  r.sampled = j.at("sampled").get<std::uint64_t>();
  r.certified = j.at("certified").get<std::uint64_t>();
  r.certification_failures = triple_sets_from(r.n, j.at("certification_failures"));
  r.converse_witnesses = triple_sets_from(r.n, j.at("converse_witnesses"));
  const bool claimed = j.at("verdict").get<std::string>() == "holds";
  if (claimed != r.holds()) throw InvalidInput("verdict disagrees with the counterexample list");
  return r;
}

// Text reports list at most this many counterexamples; JSON lists them all.
constexpr std::size_t kTextCounterexamples = 20;

std::string render_text(const SweepReport& r) {
  std::ostringstream os;
  os << "sweep n = " << r.n << ": " << r.total_configs << " mu-patterns (gauge eps_in = +1), "
     << r.orbits.size() << " orbit classes under S_" << r.n << "\n\n";
  os << "  ell  label            count\n";
  for (const auto& [key, count] : r.histogram) {
    std::string label = CategoryLabel{key.copies}.render();
    os << "  " << std::string(3 - std::min<std::size_t>(3, std::to_string(key.ell).size()), ' ')
       << key.ell << "  " << label << std::string(label.size() < 17 ? 17 - label.size() : 1, ' ')
       << count << '\n';
  }
  os << '\n' << render_catalog(r.n, r.orbits);
  os << "\noracle: " << r.certified << " of " << r.sampled << " sampled patterns certified\n";
  for (const auto& f : r.certification_failures) os << "  certification FAILED: " << to_string(f) << '\n';
  os << "converse witnesses (E != P^" << r.n - 1 << ", minimal label): " << r.converse_witnesses.size()
     << '\n';
  for (const auto& w : r.converse_witnesses) os << "  " << to_string(w) << '\n';
  os << "verdict: ";
  if (r.holds()) {
    os << "holds for all " << r.total_configs << " patterns\n";
  } else {
    os << r.counterexamples.size() << " counterexamples\n";
    const std::size_t shown = std::min<std::size_t>(r.counterexamples.size(), kTextCounterexamples);
    for (std::size_t i = 0; i < shown; ++i) os << "  " << to_string(r.counterexamples[i]) << '\n';
    if (shown < r.counterexamples.size())
      os << "  ... " << r.counterexamples.size() - shown << " more (full list with --json)\n";
  }
  return os.str();
}

ordered_json to_json(const std::vector<OrbitSummary>& orbits) {
  ordered_json arr = ordered_json::array();
  for (const auto& o : orbits) arr.push_back(orbit_json(o));
  return arr;
}

std::string render_catalog(int n, const std::vector<OrbitSummary>& orbits) {
  std::ostringstream os;
  os << "orbits for n = " << n << ":\n";
  std::size_t row = 0;
  for (const auto& o : orbits) {
    os << "  " << ++row << "  " << o.scheme_tag << "  triples " << to_string(o.canonical)
       << "  E = " << render(o.scheme) << "  ell = " << o.ell << "  C(A) = " << o.type.render()
       << "  " << o.label.render() << "  size " << o.size
       << (o.label == o.expected ? "" : "  [prediction " + o.expected.render() + "]")
       << (o.certified ? "  certified" : "") << '\n';
  }
  return os.str();
}

}  // namespace skewq

#include "skewq/point_scheme.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>

#include "skewq/errors.hpp"

namespace skewq {

IndexSet IndexSet::of(std::initializer_list<int> members) {
  std::uint32_t b = 0;
  for (int i : members) b |= 1u << (i - 1);
  return IndexSet(b);
}

int IndexSet::size() const { return std::popcount(bits_); }

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::vector<IndexSet> minimal_transversals(int n, std::span<const std::uint32_t> edges) {
  if (n < 1 || n > kMaxVariables) {
    throw GuardViolation("minimal transversal search supports 1 <= n <= " +
                         std::to_string(kMaxVariables));
  }
  std::vector<IndexSet> found;
  if (edges.empty()) {
    found.emplace_back(0u);
    return found;
  }
  const std::uint32_t universe = IndexSet::full(n).bits();
  // Enumerate subsets by size via Gosper's hack. A transversal is minimal iff
  // no smaller transversal (already found) is contained in it.
  for (int size = 1; size <= n; ++size) {
    std::uint64_t s = (std::uint64_t{1} << size) - 1;
    while (s <= universe) {
      const auto subset = static_cast<std::uint32_t>(s);
      const bool hits = std::all_of(edges.begin(), edges.end(),
                                    [subset](std::uint32_t e) { return (e & subset) != 0; });
      if (hits && std::none_of(found.begin(), found.end(), [subset](IndexSet f) {
            return (f.bits() & ~subset) == 0;
          })) {
        found.emplace_back(subset);
      }
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return found;
}

namespace {

std::vector<std::uint32_t> triple_edges(const TripleSet& t) {
  std::vector<std::uint32_t> edges;
  for (const auto& [i, j, k] : t.triples())
    edges.push_back((1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1)));
  return edges;
}

bool component_order(IndexSet a, IndexSet b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.members() < b.members();
}

}  // namespace

std::vector<IndexSet> minimal_transversals(const TripleSet& t) {
  const auto edges = triple_edges(t);
  return minimal_transversals(t.n(), edges);
}

PointScheme point_scheme(const TripleSet& t) {
  PointScheme ps;
  ps.n = t.n();
  for (IndexSet s : minimal_transversals(t)) ps.components.push_back(s.complement(t.n()));
  std::sort(ps.components.begin(), ps.components.end(), component_order);
  return ps;
}

int count_p1(const PointScheme& ps) {
  return static_cast<int>(std::count_if(ps.components.begin(), ps.components.end(),
                                        [](IndexSet c) { return c.size() == 2; }));
}

int count_p1_closed_form(const TripleSet& t) {
  const int n = t.n();
  if (n == 2) return 1;
  if (n < 2) return 0;
  int ell = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      bool all_bad = true;
      for (int k = 1; k <= n && all_bad; ++k)
        if (k != i && k != j && !t.contains(i, j, k)) all_bad = false;
      ell += all_bad;
    }
  return ell;
}

std::vector<IndexSet> canonical_components(const PointScheme& ps) {
  const int n = ps.n;
  if (n > kMaxCanonicalN) throw GuardViolation("component canonicalization limited to n <= 8");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<std::uint32_t> best;
  bool have = false;
  std::vector<std::uint32_t> image(ps.components.size());
  do {
    for (std::size_t c = 0; c < ps.components.size(); ++c) {
      std::uint32_t b = 0;
      for (std::uint32_t s = ps.components[c].bits(); s != 0; s &= s - 1)
        b |= 1u << images[static_cast<std::size_t>(std::countr_zero(s))];
      image[c] = b;
    }
    std::sort(image.begin(), image.end());
    if (!have || image < best) {
      best = image;
      have = true;
    }
  } while (std::next_permutation(images.begin(), images.end()));
  std::vector<IndexSet> out;
  for (auto b : best) out.emplace_back(b);
  return out;
}

namespace {

struct CatalogEntry {
  const char* tag;
  int n;
  std::vector<IndexSet> components;
};

const std::vector<CatalogEntry>& catalog_entries() {
  using S = IndexSet;
  static const std::vector<CatalogEntry> entries = {
      {"(4a)", 4, {S::of({1, 2, 3, 4})}},
      {"(4b)", 4, {S::of({1, 2, 4}), S::of({1, 2, 3}), S::of({3, 4})}},
      {"(4c)", 4,
       {S::of({3, 4}), S::of({2, 4}), S::of({2, 3}), S::of({1, 4}), S::of({1, 3}),
        S::of({1, 2})}},
      {"(5a)", 5, {S::of({1, 2, 3, 4, 5})}},
      {"(5b)", 5, {S::of({1, 2, 3, 5}), S::of({1, 2, 3, 4}), S::of({4, 5})}},
      {"(5c)", 5, {S::of({1, 2, 3, 4}), S::of({3, 4, 5}), S::of({1, 2, 5})}},
      {"(5d)", 5,
       {S::of({3, 4, 5}), S::of({1, 4, 5}), S::of({1, 2, 5}), S::of({1, 2, 3}),
        S::of({2, 3, 4})}},
      {"(5e)", 5,
       {S::of({1, 3, 5}), S::of({1, 3, 4}), S::of({1, 2, 5}), S::of({1, 2, 4}), S::of({4, 5}),
        S::of({2, 3})}},
      {"(5f)", 5,
       {S::of({1, 2, 5}), S::of({1, 2, 4}), S::of({1, 2, 3}), S::of({4, 5}), S::of({3, 5}),
        S::of({3, 4})}},
      {"(5g)", 5,
       {S::of({4, 5}), S::of({3, 5}), S::of({3, 4}), S::of({2, 5}), S::of({2, 4}),
        S::of({2, 3}), S::of({1, 5}), S::of({1, 4}), S::of({1, 3}), S::of({1, 2})}},
  };
  return entries;
}

PointScheme to_scheme(const CatalogEntry& e) {
  PointScheme ps{e.n, e.components};
  std::sort(ps.components.begin(), ps.components.end(), component_order);
  return ps;
}

}  // namespace

std::optional<PointScheme> catalog_scheme(const std::string& tag) {
  for (const auto& e : catalog_entries())
    if (tag == e.tag) return to_scheme(e);
  return std::nullopt;
}

std::string scheme_label(const PointScheme& ps) {
  if (ps.n == 4 || ps.n == 5) {
    static const auto canon = [] {
      std::map<std::vector<IndexSet>, std::string> m;
      for (const auto& e : catalog_entries()) m.emplace(canonical_components(to_scheme(e)), e.tag);
      return m;
    }();
    if (auto it = canon.find(canonical_components(ps)); it != canon.end()) return it->second;
  }
  std::vector<int> sizes;
  for (IndexSet c : ps.components) sizes.push_back(c.size());
  std::sort(sizes.rbegin(), sizes.rend());
  std::string s = "sizes[";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(sizes[i]);
  }
  return s + "]";
}

std::string render(IndexSet component) {
  std::string s = "P(";
  bool first = true;
  for (int i : component.members()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

std::string render(const PointScheme& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.components.size(); ++i) {
    if (i) s += " u ";
    s += render(ps.components[i]);
  }
  return s;
}

}  // namespace skewq

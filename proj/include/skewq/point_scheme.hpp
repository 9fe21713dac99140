#pragma once

// Irreducible decomposition of the point scheme
//   E = intersection over bad triples {i,j,k} of V(x_i x_j x_k)
// into coordinate subspaces P(i_1,...,i_s).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewq/sign_core.hpp"

namespace skewq {

// Subset of {1..n}, bit i-1 set iff i is a member.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  static IndexSet of(std::initializer_list<int> members);
  static IndexSet full(int n) { return IndexSet(n >= 32 ? ~0u : ((1u << n) - 1)); }

  constexpr std::uint32_t bits() const { return bits_; }
  bool contains(int i) const { return (bits_ >> (i - 1)) & 1; }
  int size() const;
  IndexSet complement(int n) const { return IndexSet(full(n).bits() & ~bits_); }
  bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  std::vector<int> members() const;

  friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

struct PointScheme {
  int n = 1;
  // Allowed-coordinate sets: {i_1..i_s} denotes P(i_1,...,i_s).
  // Sorted by decreasing size, then lexicographically by members.
  std::vector<IndexSet> components;

  friend bool operator==(const PointScheme&, const PointScheme&) = default;
};

// Inclusion-minimal vertex sets meeting every edge. Ascending-size
// exhaustive search; an empty edge list yields {empty set}. Edges are masks
// over {1..n}, n <= kMaxVariables.
std::vector<IndexSet> minimal_transversals(int n, std::span<const std::uint32_t> edges);
std::vector<IndexSet> minimal_transversals(const TripleSet& t);

PointScheme point_scheme(const TripleSet& t);

// Number of components isomorphic to P^1, i.e. of the form P(i,j).
int count_p1(const PointScheme& ps);

// Same count read off the triple set: for n >= 3, {i,j} is a component iff
// {i,j,k} is bad for every k outside {i,j}; for n = 2, E = P^1.
int count_p1_closed_form(const TripleSet& t);

// Catalog tag "(4a)".."(4c)", "(5a)".."(5g)" when the scheme is permutation
// equivalent to a catalog entry; otherwise the sorted component-size
// signature, e.g. "sizes[3,3,2]".
std::string scheme_label(const PointScheme& ps);

// The catalog entry itself (as printed, before relabeling), if any.
std::optional<PointScheme> catalog_scheme(const std::string& tag);

// Least sorted component list over all relabelings; n <= kMaxCanonicalN.
std::vector<IndexSet> canonical_components(const PointScheme& ps);

// "P(1,2,4) u P(1,2,3) u P(3,4)" style rendering, allowed indices ascending.
std::string render(const PointScheme& ps);
std::string render(IndexSet component);

}  // namespace skewq

#pragma once

// Sign matrices of (+-1)-skew polynomial algebras, their bad-triple
// two-graphs, and relabeling by permutations of the variables.
//
// All indices are 1-based: variables are x_1..x_n.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewq/combinatorics.hpp"

namespace skewq {

using Pair = std::array<int, 2>;
using Triple = std::array<int, 3>;

// Symmetric +-1 coefficient table eps_ij for x_i x_j = eps_ij x_j x_i.
// Stored on unordered pairs; the diagonal is implicitly +1.
class SignMatrix {
 public:
  explicit SignMatrix(int n);  // all +1

  static SignMatrix from_neg_pairs(int n, std::span<const Pair> neg_pairs);

  int n() const { return n_; }

  // eps_ij for any 1 <= i, j <= n (order irrelevant, eps_ii = +1).
  int operator()(int i, int j) const;
  void set(int i, int j, int sign);

  // Pairs i < j with eps_ij = -1, in lexicographic order.
  std::vector<Pair> neg_pairs() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  int n_;
  std::vector<std::int8_t> eps_;  // indexed by pair_rank
};

// Set of 3-subsets of {1..n}, encoded as a bitset over colex triple ranks.
class TripleSet {
 public:
  explicit TripleSet(int n);
  TripleSet(int n, std::span<const Triple> triples);

  int n() const { return n_; }

  // Accepts the three indices in any order.
  bool contains(int i, int j, int k) const;
  void insert(int i, int j, int k);

  std::size_t size() const;
  bool empty() const { return size() == 0; }

  // Members as sorted triples, in colex order.
  std::vector<Triple> triples() const;

  // Every 4-subset contains an even number of members.
  bool satisfies_parity() const;

  // Lexicographic comparison of the colex-indexed bit strings (bit of triple
  // rank 0 first). Returns <0, 0, >0.
  int compare_encoding(const TripleSet& other) const;

  // Bit string of length C(n,3), character r is '1' iff the triple of colex
  // rank r is a member.
  std::string encoding() const;

  // Bits 0..C(n,3)-1; only meaningful for n <= 8 (C(8,3) = 56).
  std::uint64_t mask() const;
  static TripleSet from_mask(int n, std::uint64_t mask);

  const std::vector<std::uint64_t>& words() const { return bits_; }

  friend bool operator==(const TripleSet&, const TripleSet&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> bits_;
};

class Permutation {
 public:
  // images[i-1] is the image of i; must be a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

 private:
  std::vector<int> images_;
};

// {i,j,k} is bad iff eps_ij eps_jk eps_ki = -1.
TripleSet bad_triples(const SignMatrix& s);

// Gauge-fixed section of bad_triples: eps_in = +1 for i < n and
// eps_ij = -1 iff {i,j,n} is in t. Throws InvalidInput if t fails parity.
SignMatrix realize_sign_matrix(const TripleSet& t);

TripleSet apply_permutation(const TripleSet& t, const Permutation& p);

// The relabeled algebra S_p: eps'_{p(i)p(j)} = eps_ij.
SignMatrix apply_permutation(const SignMatrix& s, const Permutation& p);

inline constexpr int kMaxCanonicalN = 8;

// Least encoding (per compare_encoding) over the S_n-orbit of t.
// Throws GuardViolation for n > kMaxCanonicalN.
TripleSet canonical_form(const TripleSet& t);

// Cheap S_n-invariants for bucketing before canonicalization.
struct OrbitInvariant {
  std::size_t triple_count = 0;
  std::vector<int> degrees;  // per-vertex triple degrees, sorted ascending

  friend auto operator<=>(const OrbitInvariant&, const OrbitInvariant&) = default;
};

OrbitInvariant orbit_invariant(const TripleSet& t);

std::string to_string(const Triple& t);
std::string to_string(const TripleSet& t);

}  // namespace skewq

#pragma once

// The algebra C(A) = k<t_1..t_m>/(t_i t_j + mu_ij t_j t_i, t_i^2 - 1), m = n-1,
// mu_ij = eps_ni eps_ij eps_jn, and its decomposition M_d(k)^c obtained from
// the alternating F_2 form recording which generators anticommute.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewq/sign_core.hpp"

namespace skewq {

inline constexpr int kMaxGenerators = 63;

// Signs mu_ij on unordered pairs of generators; t_i t_j = -mu_ij t_j t_i.
class CommutationMatrix {
 public:
  explicit CommutationMatrix(int m);  // all mu = +1 (every pair anticommutes)

  // Bit pair_rank(i,j) of neg_mask set iff mu_ij = -1.
  static CommutationMatrix from_neg_mask(int m, std::uint64_t neg_mask);
  static CommutationMatrix from_neg_pairs(int m, std::span<const Pair> neg_pairs);

  int m() const { return m_; }
  int operator()(int i, int j) const;
  void set(int i, int j, int sign);
  std::vector<Pair> neg_pairs() const;

  friend bool operator==(const CommutationMatrix&, const CommutationMatrix&) = default;

 private:
  int m_;
  std::vector<std::int8_t> mu_;
};

// Symmetric F_2 matrix with zero diagonal; row i bit j-1 is b_ij.
class F2Form {
 public:
  explicit F2Form(int m);
  static F2Form from_edges(int m, std::span<const Pair> edges);

  int m() const { return m_; }
  bool operator()(int i, int j) const { return (rows_[i - 1] >> (j - 1)) & 1; }
  void set(int i, int j, bool value);
  const std::vector<std::uint64_t>& rows() const { return rows_; }

  // B(x, y) for vectors given as bitmasks (bit i-1 <-> e_i).
  bool pair(std::uint64_t x, std::uint64_t y) const;

  friend bool operator==(const F2Form&, const F2Form&) = default;

 private:
  int m_;
  std::vector<std::uint64_t> rows_;
};

CommutationMatrix mu_matrix(const SignMatrix& s);

// The commutation matrix only depends on the bad triples: mu_ij = -1 iff
// {i,j,n} is bad.
CommutationMatrix mu_matrix(const TripleSet& t);

// b_ij = 1 iff mu_ij = +1.
F2Form anticommutation_form(const CommutationMatrix& c);

int f2_rank(const F2Form& f);

struct SymplecticBasis {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> hyperbolic_pairs;
  std::vector<std::uint64_t> radical;
};

// Symplectic Gram-Schmidt over F_2 starting from e_1..e_m; pivots are always
// the lowest-position remaining vector and its lowest-position partner.
SymplecticBasis symplectic_basis(const F2Form& f);

struct WedderburnType {
  std::uint64_t block_size = 1;   // d
  std::uint64_t block_count = 1;  // c

  std::string render() const;  // "M_4(k)^2", "k^8", "M_2(k)", "k"
  friend bool operator==(const WedderburnType&, const WedderburnType&) = default;
};

// d = 2^(rank/2), c = 2^(m - rank).
WedderburnType wedderburn_type(const F2Form& f);

struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(GaussianInt, GaussianInt) = default;
};

// Dense square matrix over Z[i].
class GaussianMatrix {
 public:
  GaussianMatrix() = default;
  explicit GaussianMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
  static GaussianMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  GaussianInt& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const GaussianInt& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
  const std::vector<GaussianInt>& entries() const { return a_; }

  GaussianMatrix scaled(GaussianInt s) const;
  GaussianMatrix kron(const GaussianMatrix& rhs) const;
  friend GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b);
  friend bool operator==(const GaussianMatrix&, const GaussianMatrix&) = default;

  // Returns true and the scalar when the matrix is s * identity.
  bool is_scalar(GaussianInt* s = nullptr) const;

 private:
  std::size_t dim_ = 0;
  std::vector<GaussianInt> a_;
};

struct RepresentationBlock {
  std::vector<int> radical_signs;             // one +-1 per radical basis vector
  std::vector<GaussianMatrix> generators;     // images of t_1..t_m
};

// One irreducible d x d representation per block. Entries lie in
// {0, +-1, +-i}; generators with an odd number of X.Z tensor slots carry a
// factor i so that every image squares to the identity.
struct Representation {
  int m = 0;
  std::size_t block_size = 1;
  std::vector<RepresentationBlock> blocks;
};

struct RepresentationChecks {
  bool involutions = false;     // T_i^2 = I
  bool commutation = false;     // T_i, T_j anticommute iff b_ij = 1, else commute
  bool spans = false;           // monomials span d^2 dimensions in every block
  bool distinct_blocks = false; // radical monomials act by distinct scalar tuples
  bool all() const { return involutions && commutation && spans && distinct_blocks; }
};

// Builds the representation along symplectic_basis(anticommutation_form(c))
// and verifies it; throws InvariantViolation if verification fails.
Representation explicit_representation(const CommutationMatrix& c);

RepresentationChecks verify_representation(const Representation& rep, const F2Form& f);

// Rank over Q(i) certified through the embedding Z[i] -> F_p, p = 998244353,
// i -> sqrt(-1). Never exceeds the characteristic-zero rank.
std::size_t modular_rank(std::span<const GaussianMatrix> mats);

}  // namespace skewq

#pragma once

// Brute-force model of C(A) as a twisted group algebra on the 2^m ordered
// monomials t^a = t_1^{a_1} ... t_m^{a_m}, with t^a t^b = sigma(a,b) t^{a xor b}.
// Everything here is exact integer or rational arithmetic.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "skewq/clifford.hpp"

namespace skewq {

inline constexpr int kMaxOracleGenerators = 8;

// Coefficients over the monomial basis, indexed by the exponent bitmask.
using AlgebraElement = std::vector<mpq_class>;

class AlgebraTable {
 public:
  AlgebraTable(int m, std::vector<std::int8_t> sigma);

  int m() const { return m_; }
  std::size_t dimension() const { return std::size_t{1} << m_; }
  int sigma(std::uint32_t a, std::uint32_t b) const { return sigma_[(std::size_t{a} << m_) | b]; }

  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement unit() const;
  AlgebraElement monomial(std::uint32_t a, const mpq_class& coeff = 1) const;

  // sigma(a,b) sigma(a^b,c) == sigma(b,c) sigma(a,b^c)
  bool associative_at(std::uint32_t a, std::uint32_t b, std::uint32_t c) const;

 private:
  int m_;
  std::vector<std::int8_t> sigma_;
};

// sigma(a,b) = product over i > j with a_i = b_j = 1 of (-mu_ij).
// Throws GuardViolation for m > kMaxOracleGenerators.
AlgebraTable structure_constants(const CommutationMatrix& c);

// Dimension of the centralizer of the generators, by exact elimination.
std::size_t center_dimension(const AlgebraTable& tab);

// Nonsingularity of G_{a,b} = trace(left multiplication by t^a t^b).
bool semisimplicity_check(const AlgebraTable& tab);

// Each element idempotent, pairwise products zero, sum equal to t^0.
bool idempotent_check(const AlgebraTable& tab, std::span<const AlgebraElement> elements);

struct Certificate {
  bool center_matches = false;
  bool semisimple = false;
  bool representation_ok = false;
  bool dimension_law = false;

  bool granted() const { return center_matches && semisimple && representation_ok && dimension_law; }
  std::string failures() const;  // empty when granted
};

Certificate certify_wedderburn(const AlgebraTable& tab, const WedderburnType& w,
                               const Representation& rep);

// Convenience: table, type and representation from one commutation matrix.
Certificate certify(const CommutationMatrix& c);

}  // namespace skewq

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "skewq/errors.hpp"
#include "skewq/oracle.hpp"

namespace skewq {
namespace {

CommutationMatrix c_one() {
  const Pair neg[] = {{2, 3}};
  return CommutationMatrix::from_neg_pairs(3, neg);
}

CommutationMatrix c_five() {
  const Pair neg[] = {{1, 3}, {2, 3}, {2, 4}};
  return CommutationMatrix::from_neg_pairs(4, neg);
}

// Sign of t^a t^b by rewriting the concatenated word: bubble-sort adjacent
// generators with t_j t_i = -mu_ij t_i t_j (i < j), cancel squares.
int word_sign(const CommutationMatrix& c, std::uint32_t a, std::uint32_t b) {
  std::vector<int> w;
  for (int i = 1; i <= c.m(); ++i)
    if (a >> (i - 1) & 1) w.push_back(i);
  for (int i = 1; i <= c.m(); ++i)
    if (b >> (i - 1) & 1) w.push_back(i);
  int sign = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] == w[k + 1]) {
        w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
      if (w[k] > w[k + 1]) {
        sign *= -c(w[k], w[k + 1]);
        std::swap(w[k], w[k + 1]);
        changed = true;
      }
    }
  }
  return sign;
}

AlgebraElement quarter(const AlgebraTable& tab, std::initializer_list<std::pair<std::uint32_t, int>> terms) {
  auto e = AlgebraElement(tab.dimension());
  for (auto [a, s] : terms) e[a] = mpq_class(s, 4);
  return e;
}

TEST(Table, TrivialAlgebra) {
  auto tab = structure_constants(CommutationMatrix(0));
  EXPECT_EQ(tab.dimension(), 1u);
  EXPECT_EQ(tab.sigma(0, 0), 1);
  EXPECT_EQ(center_dimension(tab), 1u);
}

TEST(Table, CommutativeIsGroupAlgebra) {
  for (int m = 1; m <= 5; ++m) {
    auto tab = structure_constants(CommutationMatrix::from_neg_mask(m, (std::uint64_t{1} << binomial(m, 2)) - 1));
    for (std::uint32_t a = 0; a < tab.dimension(); ++a)
      for (std::uint32_t b = 0; b < tab.dimension(); ++b) ASSERT_EQ(tab.sigma(a, b), 1);
    EXPECT_EQ(center_dimension(tab), tab.dimension());
  }
}

TEST(Table, SingleSwap) {
  auto tab = structure_constants(c_one());
  EXPECT_EQ(tab.sigma(0b010, 0b001), -1);
  EXPECT_EQ(tab.sigma(0b001, 0b010), 1);
  EXPECT_EQ(tab.sigma(0b100, 0b010), 1);
}

TEST(Table, MatchesWordRewritingExhaustively) {
  for (int m = 0; m <= 4; ++m)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << binomial(m, 2)); ++mask) {
      auto c = CommutationMatrix::from_neg_mask(m, mask);
      auto tab = structure_constants(c);
      for (std::uint32_t a = 0; a < tab.dimension(); ++a)
        for (std::uint32_t b = 0; b < tab.dimension(); ++b)
          ASSERT_EQ(tab.sigma(a, b), word_sign(c, a, b)) << m << " " << mask;
    }
}

TEST(Table, DimensionLaw) {
  for (int m = 0; m <= kMaxOracleGenerators; ++m)
    EXPECT_EQ(structure_constants(CommutationMatrix(m)).dimension(), std::size_t{1} << m);
  EXPECT_THROW(structure_constants(CommutationMatrix(kMaxOracleGenerators + 1)), GuardViolation);
}

TEST(Cocycle, ExhaustiveUpToFour) {
  for (int m = 0; m <= 4; ++m)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << binomial(m, 2)); ++mask) {
      auto tab = structure_constants(CommutationMatrix::from_neg_mask(m, mask));
      const auto dim = static_cast<std::uint32_t>(tab.dimension());
      for (std::uint32_t a = 0; a < dim; ++a)
        for (std::uint32_t b = 0; b < dim; ++b)
          for (std::uint32_t c = 0; c < dim; ++c) ASSERT_TRUE(tab.associative_at(a, b, c));
    }
}

TEST(Cocycle, RandomFiveAndSix) {
  std::mt19937_64 rng(79);
  for (int m = 5; m <= 6; ++m)
    for (int form = 0; form < 10; ++form) {
      auto tab = structure_constants(
          CommutationMatrix::from_neg_mask(m, rng() & ((std::uint64_t{1} << binomial(m, 2)) - 1)));
      const auto dim = static_cast<std::uint32_t>(tab.dimension());
      for (int k = 0; k < 1000; ++k)
        ASSERT_TRUE(tab.associative_at(static_cast<std::uint32_t>(rng() % dim),
                                       static_cast<std::uint32_t>(rng() % dim),
                                       static_cast<std::uint32_t>(rng() % dim)));
    }
}

TEST(Center, CliffordOneHasTwoBlocks) {
  EXPECT_EQ(center_dimension(structure_constants(c_one())), 2u);
}

TEST(Center, MatchesFormRadicalSize) {
  auto radical = [](const CommutationMatrix& c) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(c.m()));
    for (int i = 1; i <= c.m(); ++i)
      for (int j = 1; j <= c.m(); ++j)
        if (i != j && c(i, j) == 1) rows[i - 1] |= std::uint64_t{1} << (j - 1);
    return std::size_t{1} << (c.m() - testing::span_rank(rows));
  };
  for (int m = 0; m <= 4; ++m)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << binomial(m, 2)); ++mask) {
      auto c = CommutationMatrix::from_neg_mask(m, mask);
      ASSERT_EQ(center_dimension(structure_constants(c)), radical(c));
    }
  std::mt19937_64 rng(83);
  for (int m = 5; m <= 6; ++m)
    for (int rep = 0; rep < 8; ++rep) {
      auto c = CommutationMatrix::from_neg_mask(m, rng() & ((std::uint64_t{1} << binomial(m, 2)) - 1));
      EXPECT_EQ(center_dimension(structure_constants(c)), radical(c));
    }
}

TEST(Semisimple, OneGenerator) {
  EXPECT_TRUE(semisimplicity_check(structure_constants(CommutationMatrix(1))));
}

TEST(Semisimple, CliffordOneGramDeterminant) {
  auto c = c_one();
  // Gram entry: trace of left multiplication by t^a t^b on the regular module,
  // computed from the word model.
  std::vector<std::vector<long long>> g(8, std::vector<long long>(8));
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) {
      // Left multiplication by a nonidentity monomial permutes the basis
      // without fixed points, so only t^a t^b = +-1 has nonzero trace.
      g[a][b] = (a ^ b) == 0 ? 8LL * word_sign(c, a, b) : 0;
    }
  EXPECT_NE(testing::bareiss_det(g), 0);
  EXPECT_TRUE(semisimplicity_check(structure_constants(c)));
}

TEST(Semisimple, EveryPatternUpToFour) {
  for (int m = 0; m <= 4; ++m)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << binomial(m, 2)); ++mask)
      ASSERT_TRUE(semisimplicity_check(structure_constants(CommutationMatrix::from_neg_mask(m, mask))));
}

TEST(Idempotents, CliffordOne) {
  auto tab = structure_constants(c_one());
  // t_2 = 0b010, t_3 = 0b100, t_2 t_3 = 0b110.
  std::vector<AlgebraElement> es{
      quarter(tab, {{0, 1}, {2, 1}, {4, 1}, {6, 1}}),
      quarter(tab, {{0, 1}, {2, -1}, {4, 1}, {6, -1}}),
      quarter(tab, {{0, 1}, {2, 1}, {4, -1}, {6, -1}}),
      quarter(tab, {{0, 1}, {2, -1}, {4, -1}, {6, 1}}),
  };
  EXPECT_TRUE(idempotent_check(tab, es));
  es.pop_back();
  EXPECT_FALSE(idempotent_check(tab, es));
}

TEST(Idempotents, CliffordFive) {
  auto tab = structure_constants(c_five());
  // t_1 = 0b0001, t_3 = 0b0100, t_1 t_3 = 0b0101.
  std::vector<AlgebraElement> es{
      quarter(tab, {{0, 1}, {1, 1}, {4, 1}, {5, 1}}),
      quarter(tab, {{0, 1}, {1, -1}, {4, 1}, {5, -1}}),
      quarter(tab, {{0, 1}, {1, 1}, {4, -1}, {5, -1}}),
      quarter(tab, {{0, 1}, {1, -1}, {4, -1}, {5, 1}}),
  };
  EXPECT_TRUE(idempotent_check(tab, es));
}

TEST(Idempotents, UnitAlone) {
  auto tab = structure_constants(CommutationMatrix(3));
  std::vector<AlgebraElement> one{tab.unit()};
  EXPECT_TRUE(idempotent_check(tab, one));
  std::vector<AlgebraElement> gen{tab.monomial(1)};
  EXPECT_FALSE(idempotent_check(tab, gen));
}

TEST(Certify, CatalogExamples) {
  EXPECT_TRUE(certify(c_one()).granted());
  EXPECT_TRUE(certify(CommutationMatrix(4)).granted());
  const Pair all[] = {{1, 2}, {1, 3}, {2, 3}};
  EXPECT_TRUE(certify(CommutationMatrix::from_neg_pairs(3, all)).granted());
}

TEST(Certify, RejectsWrongType) {
  auto c = c_one();
  auto tab = structure_constants(c);
  auto rep = explicit_representation(c);
  auto cert = certify_wedderburn(tab, WedderburnType{1, 8}, rep);
  EXPECT_FALSE(cert.granted());
  EXPECT_FALSE(cert.center_matches);
  EXPECT_FALSE(cert.failures().empty());
}

TEST(Certify, RejectsRepresentationOfOtherAlgebra) {
  auto tab = structure_constants(c_one());
  auto other = explicit_representation(CommutationMatrix(3));
  auto cert = certify_wedderburn(tab, WedderburnType{2, 2}, other);
  EXPECT_FALSE(cert.representation_ok);
}

TEST(Certify, EveryPatternUpToFour) {
  for (int m = 0; m <= 4; ++m)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << binomial(m, 2)); ++mask) {
      auto cert = certify(CommutationMatrix::from_neg_mask(m, mask));
      ASSERT_TRUE(cert.granted()) << m << " " << mask << ": " << cert.failures();
    }
}

}  // namespace
}  // namespace skewq

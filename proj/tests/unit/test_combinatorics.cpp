#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wreath/bruhat.hpp"
#include "wreath/matrix.hpp"
#include "wreath/partition.hpp"
#include "wreath/permutation.hpp"
#include "wreath/rational.hpp"

using namespace wreath;

namespace {

oracle::Perm raw(const Permutation& p) {
  oracle::Perm out;
  for (int v : p.one_line()) out.push_back(v - 1);
  return out;
}

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::from_one_line(v);
}

}  // namespace

TEST(Rational, LowestTermsAndSigns) {
  const Rational a = Rational::parse("6/-4");
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(a.to_fraction_string(), "-3/2");
  EXPECT_EQ(Rational(4).to_fraction_string(), "4/1");
  EXPECT_EQ((Rational(1) / Rational(3) + Rational(1) / Rational(6)).to_string(), "1/2");
  EXPECT_TRUE((Rational(2) - Rational(2)).is_zero());
  EXPECT_LT(Rational(-1), Rational(1) / Rational(1000));
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
}

TEST(Matrix, RankOfRationalMatrices) {
  Matrix a(3, 3);
  a(0, 0) = Rational(1) / Rational(2);
  a(0, 1) = Rational(1);
  a(1, 0) = Rational(1);
  a(1, 1) = Rational(2);
  a(2, 2) = Rational(-7) / Rational(3);
  EXPECT_EQ(rank(a), 2u);
  EXPECT_EQ(rank(Matrix::identity(5)), 5u);
  EXPECT_EQ(rank(Matrix(4, 6)), 0u);
}

TEST(Matrix, KroneckerAndPower) {
  Matrix j(2, 2);
  j(0, 1) = Rational(1);
  EXPECT_TRUE(power(j, 2).is_zero());
  const Matrix k = kronecker(Matrix::identity(2), j);
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(rank(k), 2u);
  EXPECT_EQ(Matrix::identity(3).trace(), Rational(3));
}

TEST(Permutation, ComposeExample) {
  const Permutation p = Permutation::from_one_line({2, 1, 3});
  const Permutation q = Permutation::from_one_line({1, 3, 2});
  EXPECT_EQ(compose(p, q), Permutation::from_one_line({2, 3, 1}));
  EXPECT_EQ(compose(Permutation(3), p), p);
  EXPECT_THROW(compose(p, Permutation(4)), std::invalid_argument);
  EXPECT_THROW(Permutation::from_one_line({1, 1, 2}), std::invalid_argument);
}

TEST(Permutation, InverseLawOnRandomPermutations) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation p = random_perm(1 + rng() % 8, rng);
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
  }
}

TEST(Permutation, LengthExamples) {
  EXPECT_EQ(length(Permutation(5)), 0u);
  EXPECT_EQ(length(Permutation::from_one_line({4, 3, 2, 1})), 6u);
  EXPECT_EQ(length(Permutation::from_one_line({3, 4, 1, 2})), 4u);
}

TEST(Permutation, LengthMatchesWordLengthOracle) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Permutation& p : all_permutations(n)) {
      ASSERT_EQ(length(p), oracle::word_length(raw(p))) << p.to_string();
      const auto word = reduced_word(p);
      ASSERT_EQ(word.size(), length(p));
      ASSERT_EQ(from_word(n, word), p);
    }
}

TEST(Permutation, LexRankRoundTrip) {
  const auto perms = all_permutations(5);
  ASSERT_EQ(perms.size(), 120u);
  for (std::size_t r = 0; r < perms.size(); ++r) {
    EXPECT_EQ(lex_rank(perms[r]), r);
    EXPECT_EQ(lex_unrank(5, r), perms[r]);
  }
}

TEST(Bruhat, Examples) {
  const Permutation s1 = Permutation::simple(3, 1);
  const Permutation s2 = Permutation::simple(3, 2);
  EXPECT_TRUE(bruhat_leq(Permutation(3), s1 * s2));
  EXPECT_TRUE(bruhat_leq(s1, s1 * s2));
  EXPECT_FALSE(bruhat_leq(s1, s2));
  EXPECT_THROW(bruhat_leq(s1, Permutation(4)), std::invalid_argument);
}

TEST(Bruhat, AgreesWithSubwordOracle) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (const Permutation& w : perms) {
      const auto down = oracle::subword_down_set(raw(w));
      for (const Permutation& u : perms) ASSERT_EQ(bruhat_leq(u, w), down.count(raw(u)) == 1) << n;
    }
  }
}

TEST(Bruhat, IsPartialOrder) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& a : perms)
      for (const auto& b : perms) {
        if (a != b && bruhat_leq(a, b)) EXPECT_FALSE(bruhat_leq(b, a));
        if (!bruhat_leq(a, b)) continue;
        for (const auto& c : perms)
          if (bruhat_leq(b, c)) EXPECT_TRUE(bruhat_leq(a, c));
      }
  }
}

TEST(Bruhat, SymmetricGroupThreeHasEightCovers) {
  EXPECT_EQ(bruhat_poset(3).covers().size(), 8u);
  EXPECT_THROW(bruhat_poset(8), std::out_of_range);
}

TEST(Partition, ParseAndOrder) {
  EXPECT_EQ(Partition::parse("(2,1)"), (Partition{2, 1}));
  EXPECT_TRUE(Partition::parse("-").empty());
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  const auto two = partitions_of(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], Partition{2});
  EXPECT_EQ(two[1], (Partition{1, 1}));
  ASSERT_EQ(partitions_of(0).size(), 1u);
  EXPECT_TRUE(partitions_of(0)[0].empty());
  EXPECT_EQ(partitions_of(4).size(), 5u);
}

TEST(Partition, CountsMatchOracle) {
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(partitions_of(n).size(), oracle::partition_number(n));
    EXPECT_EQ(partition_count(n), oracle::partition_number(n));
  }
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(Partition{4}), (Partition{1, 1, 1, 1}));
  EXPECT_EQ(conjugate(Partition{2, 1}), (Partition{2, 1}));
  EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
  for (int n = 0; n <= 8; ++n)
    for (const Partition& p : partitions_of(n)) {
      EXPECT_EQ(conjugate(conjugate(p)), p);
      int binomials = 0;
      const Partition dual = conjugate(p);
      for (int c : dual.parts()) binomials += c * (c - 1) / 2;
      EXPECT_EQ(n_stat(p), binomials);
    }
}

TEST(Partition, HookDimension) {
  EXPECT_EQ(hook_dim(Partition{5}), 1u);
  EXPECT_EQ(hook_dim(Partition{2, 1}), 2u);
  EXPECT_EQ(hook_dim(Partition{2, 2}), 2u);
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t squares = 0;
    for (const Partition& p : partitions_of(n)) {
      EXPECT_EQ(hook_dim(p), oracle::count_syt(p.parts()));
      EXPECT_EQ(standard_tableaux(p).size(), hook_dim(p));
      squares += hook_dim(p) * hook_dim(p);
    }
    EXPECT_EQ(squares, factorial(static_cast<std::size_t>(n)));
  }
}

TEST(Partition, NStatistic) {
  EXPECT_EQ(n_stat(Partition{3}), 0);
  EXPECT_EQ(n_stat(Partition{1, 1}), 1);
  EXPECT_EQ(n_stat(Partition{2, 1}), 1);
}

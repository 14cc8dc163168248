#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "wreath/representation.hpp"

using namespace wreath;

namespace {

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> type;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p(j))) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

CliffordLabel label(std::size_t m, std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<std::pair<Partition, Partition>> entries;
  for (auto [nu, lambda] : pairs) entries.emplace_back(Partition::parse(nu), Partition::parse(lambda));
  return CliffordLabel::make(m, std::move(entries));
}

const std::vector<std::pair<std::size_t, std::size_t>> kSmall{{2, 2}, {3, 2}, {2, 3}};

}  // namespace

TEST(Specht, DimensionsAreTableauCounts) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) EXPECT_EQ(specht_rep(lambda).dimension(), oracle::count_syt(lambda.parts()));
  EXPECT_THROW(specht_rep(Partition({5, 3})), BoundExceeded);
  EXPECT_THROW(specht_rep(Partition()), std::invalid_argument);
}

TEST(Specht, CharactersMatchMurnaghanNakayama) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const Character chi = character(specht_rep(lambda));
      for (std::size_t rep : chi.ctx->class_representatives()) {
        const auto mu = cycle_type(chi.ctx->element(rep).factors[0]);
        ASSERT_EQ(chi.values[chi.ctx->class_of(rep)], Rational(oracle::mn_character(lambda.parts(), mu)))
            << lambda.to_string();
      }
    }
}

TEST(Specht, OrthonormalForSymmetricGroupFour) {
  const auto lambdas = partitions_of(4);
  for (std::size_t a = 0; a < lambdas.size(); ++a)
    for (std::size_t b = 0; b < lambdas.size(); ++b)
      EXPECT_EQ(inner_product(character(specht_rep(lambdas[a])), character(specht_rep(lambdas[b]))), Rational(a == b ? 1 : 0));
}

TEST(Representation, RejectsBrokenPresentations) {
  const WreathShape s3(3, 1);
  Matrix minus(1, 1), plus(1, 1);
  minus(0, 0) = -1;
  plus(0, 0) = 1;
  EXPECT_NO_THROW(Representation(s3, 1, {minus, minus}));
  EXPECT_THROW(Representation(s3, 1, {minus, plus}), std::invalid_argument);
  EXPECT_THROW(Representation(s3, 1, {minus}), std::invalid_argument);
  EXPECT_THROW(Representation(s3, 2, {minus, minus}), std::invalid_argument);
  Matrix two(1, 1);
  two(0, 0) = 2;
  EXPECT_THROW(Representation(WreathShape(2, 2), 1, {plus, plus, two}), std::invalid_argument);
}

TEST(Representation, ImageIsHomomorphism) {
  const Representation rho = clifford_irrep(label(3, {{"2,1", "1"}, {"3", "1"}}));
  const auto ctx = context_for(rho.shape());
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& a = ctx->element(rng() % ctx->size());
    const auto& b = ctx->element(rng() % ctx->size());
    ASSERT_EQ(rho.image(a * b), rho.image(a) * rho.image(b));
  }
  EXPECT_EQ(rho.image(WreathElement::identity(3, 2)), Matrix::identity(rho.dimension()));
}

TEST(Representation, TensorCharacterIsProduct) {
  const WreathShape s4(4, 1);
  const Representation a = specht_rep(Partition({3, 1}));
  const Representation b = specht_rep(Partition({2, 2}));
  const Character ca = character(a), cb = character(b), cab = character(tensor_product(a, b));
  for (std::size_t k = 0; k < ca.values.size(); ++k) EXPECT_EQ(cab.values[k], ca.values[k] * cb.values[k]);
}

TEST(Extension, PlacePermutationTraces) {
  GammaMap twice_two{{{Partition({2}), 2}}};
  const Representation triv = extend_to_wreath(2, twice_two);
  EXPECT_EQ(triv.dimension(), 1u);
  EXPECT_EQ(character(triv).at(parse_word("t1", 2, 2)), 1);
  GammaMap twice_sign{{{Partition({1, 1}), 2}}};
  const Character sign = character(extend_to_wreath(2, twice_sign));
  EXPECT_EQ(sign.at(parse_word("s1^1", 2, 2)), -1);
  EXPECT_EQ(sign.at(parse_word("t1", 2, 2)), 1);
  GammaMap twice_std{{{Partition({2, 1}), 2}}};
  const Representation std2 = extend_to_wreath(3, twice_std);
  EXPECT_EQ(std2.dimension(), 4u);
  // Swapping the factors of V (x) V has trace dim V.
  EXPECT_EQ(character(std2).at(parse_word("t1", 3, 2)), 2);
}

TEST(Inflation, BaseGroupActsTrivially) {
  const Representation infl = inflate(label(2, {{"2", "1,1"}}));
  EXPECT_EQ(infl.dimension(), 1u);
  EXPECT_EQ(infl.image(parse_word("s1^1", 2, 2)), Matrix::identity(1));
  EXPECT_EQ(infl.image(parse_word("t1", 2, 2)).trace(), -1);
}

TEST(Induction, TrivialCharacterMatchesCosetCount) {
  // Ind_H^G 1 (g) = #{x in G : x^-1 g x in H} / |H|.
  for (auto [m, d] : kSmall) {
    const WreathShape base(m, d, std::vector<std::size_t>(d, 1));
    const Character ind = character(induce(Representation::trivial(base), WreathShape(m, d)));
    const GroupContext& g = *ind.ctx;
    for (std::size_t rep : g.class_representatives()) {
      std::size_t count = 0;
      for (std::size_t x = 0; x < g.size(); ++x)
        if (base.contains(g.element(g.multiply(g.multiply(g.inverse(x), rep), x)))) ++count;
      EXPECT_EQ(ind.values[g.class_of(rep)], Rational(static_cast<long>(count)) / Rational(static_cast<long>(base.order())));
    }
  }
  const WreathShape sub(2, 3, {2, 1});
  EXPECT_THROW(induce(Representation::trivial(WreathShape(2, 3)), sub), std::invalid_argument);
}

TEST(Induction, FrobeniusReciprocity) {
  for (auto [m, d] : kSmall) {
    const WreathShape full(m, d);
    const WreathShape base(m, d, std::vector<std::size_t>(d, 1));
    const auto table = character_table(m, d);
    std::mt19937 rng(static_cast<unsigned>(m * 10 + d));
    const auto parts = partitions_of(static_cast<int>(m));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Partition> factors;
      for (std::size_t i = 0; i < d; ++i) factors.push_back(parts[rng() % parts.size()]);
      const Representation h = base_tensor(m, factors);
      const std::size_t row = rng() % table.rows.size();
      const Representation g = clifford_irrep(table.labels[row]);
      EXPECT_EQ(inner_product(character(induce(h, full)), table.rows[row]),
                inner_product(character(h), character(restrict_to(g, base))));
    }
  }
}

TEST(Restriction, AgreesWithOriginalCharacter) {
  const Representation rho = clifford_irrep(label(2, {{"2", "1"}, {"1,1", "1,1"}}));
  const WreathShape sub(2, 3, {2, 1});
  const Character full = character(rho);
  const Character res = character(restrict_to(rho, sub));
  for (const auto& x : res.ctx->elements()) EXPECT_EQ(res.at(x), full.at(x));
}

TEST(Clifford, CompleteAndOrthonormal) {
  for (auto [m, d] : kSmall) {
    const CharacterTable table = character_table(m, d);
    ASSERT_EQ(table.rows.size(), table.ctx->conjugacy_classes().size());
    Rational sum_sq = 0;
    for (std::size_t a = 0; a < table.rows.size(); ++a) {
      sum_sq += table.rows[a].dimension() * table.rows[a].dimension();
      for (std::size_t b = 0; b < table.rows.size(); ++b)
        ASSERT_EQ(inner_product(table.rows[a], table.rows[b]), Rational(a == b ? 1 : 0));
    }
    EXPECT_EQ(sum_sq, Rational(static_cast<long>(table.ctx->size())));
  }
}

TEST(Clifford, Dimensions) {
  EXPECT_EQ(clifford_irrep(label(2, {{"2", "2"}})).dimension(), 1u);
  EXPECT_EQ(clifford_irrep(label(2, {{"2", "1"}, {"1,1", "1"}})).dimension(), 2u);
  EXPECT_EQ(clifford_irrep(label(3, {{"2,1", "1,1"}})).dimension(), 4u);
  EXPECT_EQ(clifford_irrep(label(2, {{"1,1", "2,1"}})).dimension(), 2u);
  EXPECT_THROW(label(2, {{"3", "1"}}), std::invalid_argument);
}

TEST(SpringerModule, DimensionsAndIsotypicParts) {
  const auto two_two = springer_module(JordanProfile::make(2, {Partition({2}), Partition({2})}));
  EXPECT_EQ(two_two.dimension(), 2u);
  EXPECT_EQ(two_two.right_group.dimension(), 2u);
  const auto mixed = springer_module(JordanProfile::make(3, {Partition({2, 1}), Partition({2, 1}), Partition({3})}));
  EXPECT_EQ(mixed.dimension(), 24u);
  const Character sym = isotypic_character(two_two, label(2, {{"2", "2"}}));
  const Character alt = isotypic_character(two_two, label(2, {{"2", "1,1"}}));
  EXPECT_EQ(sym.dimension(), 1);
  EXPECT_EQ(alt.dimension(), 1);
  EXPECT_EQ(sym.at(parse_word("t1", 2, 2)), 1);
  EXPECT_EQ(alt.at(parse_word("t1", 2, 2)), -1);
  EXPECT_THROW(isotypic_character(two_two, label(2, {{"2", "1"}, {"1,1", "1"}})), std::invalid_argument);
}

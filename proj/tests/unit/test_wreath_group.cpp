#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <map>
#include <set>

#include "oracles.hpp"
#include "wreath/bruhat.hpp"
#include "wreath/group_context.hpp"
#include "wreath/signed_permutation.hpp"
#include "wreath/wreath_element.hpp"

using namespace wreath;

namespace {

WreathElement random_element(const GroupContext& ctx, std::mt19937& rng) {
  return ctx.element(rng() % ctx.size());
}

WreathElement w(const char* word, std::size_t m = 2, std::size_t d = 2) { return parse_word(word, m, d); }

}  // namespace

TEST(WreathElement, TopActsOnFactors) {
  const WreathElement t = generator(2, 2, GeneratorKind::kT, 1);
  const WreathElement s = generator(2, 2, GeneratorKind::kS, 1, 1);
  const WreathElement product = t * s;
  EXPECT_TRUE(product.factors[0].is_identity());
  EXPECT_EQ(product.factors[1], Permutation::simple(2, 1));
  EXPECT_EQ(product.top, Permutation::simple(2, 1));
  EXPECT_EQ(t * s * t, generator(2, 2, GeneratorKind::kS, 1, 2));
}

TEST(WreathElement, GroupAxioms) {
  std::mt19937 rng(11);
  for (auto [m, d] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
    const GroupContext ctx(m, d);
    const WreathElement e = WreathElement::identity(m, d);
    for (int trial = 0; trial < 500; ++trial) {
      const auto a = random_element(ctx, rng);
      const auto b = random_element(ctx, rng);
      const auto c = random_element(ctx, rng);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * e, a);
      ASSERT_EQ(e * a, a);
      ASSERT_TRUE((a * inverse(a)).is_identity());
    }
  }
}

TEST(WreathElement, EmbedIsInjectiveHomomorphism) {
  EXPECT_EQ(embed(generator(2, 2, GeneratorKind::kT, 1)), Permutation::from_one_line({3, 4, 1, 2}));
  EXPECT_EQ(embed(generator(2, 2, GeneratorKind::kS, 1, 2)), Permutation::transposition(4, 3, 4));
  EXPECT_TRUE(embed(WreathElement::identity(3, 2)).is_identity());
  const GroupContext ctx(3, 3);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_element(ctx, rng);
    const auto b = random_element(ctx, rng);
    ASSERT_EQ(embed(a * b), embed(a) * embed(b));
  }
  for (auto [m, d] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {2, 3}}) {
    const GroupContext small(m, d);
    std::set<Permutation> images;
    for (const auto& x : small.elements()) images.insert(embed(x));
    EXPECT_EQ(images.size(), small.size());
    std::set<oracle::Perm> expected;
    for (const auto& p : oracle::wreath_group_in_smd(m, d)) expected.insert(p);
    std::set<oracle::Perm> got;
    for (const auto& p : images) {
      oracle::Perm r;
      for (int v : p.one_line()) r.push_back(v - 1);
      got.insert(r);
    }
    EXPECT_EQ(got, expected);
  }
}

TEST(WreathElement, TopGeneratorsHaveLengthMSquared) {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t k = 1; k < 3; ++k) EXPECT_EQ(length(embed(generator(m, 3, GeneratorKind::kT, k))), m * m);
}

TEST(WreathElement, InverseFormula) {
  const GroupContext ctx(3, 2);
  for (const auto& a : ctx.elements()) {
    const WreathElement inv = inverse(a);
    EXPECT_EQ(inv.top, inverse(a.top));
    for (std::size_t i = 0; i < 2; ++i)
      EXPECT_EQ(inv.factors[i], inverse(a.factors[static_cast<std::size_t>(a.top(i))]));
  }
  EXPECT_EQ(inverse(generator(3, 2, GeneratorKind::kT, 1)), generator(3, 2, GeneratorKind::kT, 1));
}

TEST(WreathElement, GeneratorRanges) {
  EXPECT_NO_THROW(generator(2, 1, GeneratorKind::kS, 1, 1));
  EXPECT_THROW(generator(2, 2, GeneratorKind::kS, 2, 1), std::out_of_range);
  EXPECT_THROW(generator(2, 2, GeneratorKind::kS, 1, 3), std::out_of_range);
  EXPECT_THROW(generator(2, 2, GeneratorKind::kT, 2), std::out_of_range);
  EXPECT_THROW(generator(2, 2, GeneratorKind::kT, 0), std::out_of_range);
}

TEST(WreathElement, WordParsing) {
  EXPECT_EQ(w("s1^1 s1^2"), w("s1^2*s1^1"));
  EXPECT_TRUE(w("e").is_identity());
  EXPECT_TRUE(w("t1 t1").is_identity());
  EXPECT_THROW(w("x1"), std::invalid_argument);
  EXPECT_THROW(w("s1"), std::invalid_argument);
  EXPECT_THROW(w("s1^3"), std::out_of_range);
  EXPECT_THROW(w("t2"), std::out_of_range);
  const GroupContext ctx(3, 2);
  for (const auto& x : ctx.elements()) EXPECT_EQ(parse_word(format_word(x), 3, 2), x);
}

TEST(WreathBruhat, SmallExamples) {
  EXPECT_TRUE(bruhat_leq(w("s1^1"), w("s1^1 s1^2")));
  EXPECT_FALSE(bruhat_leq(w("s1^1"), w("t1")));
  EXPECT_TRUE(bruhat_leq(w("t1"), w("s1^1 t1")));
  EXPECT_THROW(bruhat_leq(w("t1"), w("e", 2, 3)), ContextMismatch);
}

TEST(WreathBruhat, FibreIsProductOrder) {
  const GroupContext ctx(3, 2);
  for (const auto& x : ctx.elements())
    for (const auto& y : ctx.elements()) {
      bool expected = x.top == y.top;
      for (std::size_t i = 0; i < 2; ++i)
        expected = expected && oracle::subword_down_set([&] {
                                  oracle::Perm r;
                                  for (int v : y.factors[i].one_line()) r.push_back(v - 1);
                                  return r;
                                }())
                                   .count([&] {
                                     oracle::Perm r;
                                     for (int v : x.factors[i].one_line()) r.push_back(v - 1);
                                     return r;
                                   }());
      ASSERT_EQ(bruhat_leq(x, y), expected);
    }
}

TEST(Hasse, TwoWreathTwo) {
  const GroupContext ctx(2, 2);
  const auto covers = hasse_covers(ctx);
  std::set<std::pair<std::string, std::string>> got;
  for (auto [lo, hi] : covers) got.emplace(format_word(ctx.element(lo)), format_word(ctx.element(hi)));
  const std::set<std::pair<std::string, std::string>> expected{
      {"e", "s1^1"},           {"e", "s1^2"},           {"s1^1", "s1^1 s1^2"},         {"s1^2", "s1^1 s1^2"},
      {"t1", "s1^1 t1"},       {"t1", "s1^2 t1"},       {"s1^1 t1", "s1^1 s1^2 t1"}, {"s1^2 t1", "s1^1 s1^2 t1"}};
  EXPECT_EQ(got, expected);
}

TEST(Hasse, DegenerateCases) {
  EXPECT_TRUE(hasse_covers(GroupContext(1, 3)).empty());
  EXPECT_EQ(GroupContext(1, 3).size(), 6u);
  EXPECT_EQ(hasse_covers(GroupContext(3, 1)).size(), bruhat_poset(3).covers().size());
  EXPECT_EQ(hasse_covers(GroupContext(3, 1)).size(), 8u);
}

TEST(Hasse, CoversChangeOneFactorByOne) {
  const GroupContext ctx(3, 2);
  for (auto [lo, hi] : hasse_covers(ctx)) {
    const auto& x = ctx.element(lo);
    const auto& y = ctx.element(hi);
    ASSERT_EQ(x.top, y.top);
    std::size_t changed = 0;
    for (std::size_t i = 0; i < 2; ++i)
      if (x.factors[i] != y.factors[i]) {
        ++changed;
        EXPECT_EQ(length(y.factors[i]), length(x.factors[i]) + 1);
      }
    EXPECT_EQ(changed, 1u);
  }
}

TEST(GroupContext, OrderAndBound) {
  EXPECT_EQ(GroupContext(3, 2).size(), 72u);
  EXPECT_EQ(GroupContext(2, 3).size(), 48u);
  EXPECT_THROW(GroupContext(9, 9), BoundExceeded);
  EXPECT_THROW(GroupContext(3, 3, 100), BoundExceeded);
  EXPECT_EQ(WreathShape(2, 3, {1, 2}).order(), 16u);
  EXPECT_THROW(WreathShape(2, 3, {1, 1}), std::invalid_argument);
}

TEST(GroupContext, EnvironmentOverridesBound) {
  ::setenv(kEnumerationBoundEnv, "10", 1);
  EXPECT_EQ(enumeration_bound(), 10u);
  EXPECT_NO_THROW(GroupContext(2, 2));
  EXPECT_THROW(GroupContext(3, 2), BoundExceeded);
  ::setenv(kEnumerationBoundEnv, "junk", 1);
  EXPECT_EQ(enumeration_bound(), kDefaultEnumerationBound);
  ::unsetenv(kEnumerationBoundEnv);
}

TEST(GroupContext, ConjugacyClassesMatchOracle) {
  for (auto [m, d] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {2, 3}, {4, 1}, {1, 4}, {3, 3}}) {
    const GroupContext ctx(m, d);
    EXPECT_EQ(ctx.conjugacy_classes().size(), oracle::class_count(oracle::wreath_group_in_smd(m, d))) << m << "," << d;
    std::size_t total = 0;
    for (const auto& c : ctx.conjugacy_classes()) total += c.size();
    EXPECT_EQ(total, ctx.size());
  }
  EXPECT_EQ(GroupContext(2, 2).conjugacy_classes().size(), 5u);
  EXPECT_EQ(GroupContext(3, 2).conjugacy_classes().size(), 9u);
  EXPECT_EQ(GroupContext(5, 1).conjugacy_classes().size(), 7u);
}

TEST(CellStatistics, MatchesMahonianPower) {
  for (auto [m, d] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {2, 3}, {4, 1}, {1, 3}}) {
    const GroupContext ctx(m, d);
    const CellStatistics stats = cell_statistics(ctx);
    std::vector<std::uint64_t> poly{1};
    const auto factor = oracle::mahonian(m);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::uint64_t> next(poly.size() + factor.size() - 1, 0);
      for (std::size_t a = 0; a < poly.size(); ++a)
        for (std::size_t b = 0; b < factor.size(); ++b) next[a + b] += poly[a] * factor[b];
      poly = next;
    }
    EXPECT_EQ(stats.cell_count, ctx.size());
    std::map<std::size_t, std::size_t> expected;
    for (std::size_t k = 0; k < poly.size(); ++k)
      if (poly[k]) expected[k] = poly[k] * factorial(d);
    EXPECT_EQ(stats.by_dimension, expected);
  }
  const CellStatistics s22 = cell_statistics(GroupContext(2, 2));
  EXPECT_EQ(s22.by_dimension, (std::map<std::size_t, std::size_t>{{0, 2}, {1, 4}, {2, 2}}));
}

TEST(TypeB, LengthMatchesGeneratorDistance) {
  // BFS over windows with the generators applied on the right.
  for (std::size_t n = 1; n <= 4; ++n) {
    std::map<std::vector<int>, std::size_t> dist;
    std::vector<int> start(n);
    for (std::size_t i = 0; i < n; ++i) start[i] = static_cast<int>(i + 1);
    dist[start] = 0;
    std::vector<std::vector<int>> frontier{start};
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& wv : frontier)
        for (std::size_t g = 0; g < n; ++g) {
          auto v = wv;
          if (g == 0) v[0] = -v[0];
          else std::swap(v[g - 1], v[g]);
          if (dist.emplace(v, dist[wv] + 1).second) next.push_back(v);
        }
      frontier = std::move(next);
    }
    EXPECT_EQ(all_signed_permutations(n).size(), dist.size());
    for (const auto& [window, len] : dist) ASSERT_EQ(length_b(SignedPermutation::from_window(window)), len);
  }
  EXPECT_EQ(length_b(SignedPermutation::from_window({-1, -2, -3})), 9u);
}

TEST(TypeB, WordExamples) {
  const std::vector<std::size_t> e{};
  const std::vector<std::size_t> s01{0, 1};
  const std::vector<std::size_t> s101{1, 0, 1};
  const std::vector<std::size_t> s1{1};
  const std::vector<std::size_t> s0{0};
  EXPECT_TRUE(coxeterB_leq(e, s101, 2));
  EXPECT_TRUE(coxeterB_leq(s01, s101, 2));
  EXPECT_FALSE(coxeterB_leq(s1, s0, 2));
  const std::vector<std::size_t> bad{2};
  EXPECT_THROW(coxeterB_leq(bad, s0, 2), std::out_of_range);
}

TEST(TypeB, WreathOrderIsStrictlyCoarser) {
  const GroupContext ctx(2, 2);
  EXPECT_EQ(to_signed(w("s1^1")), SignedPermutation::generator(2, 0));
  EXPECT_EQ(to_signed(w("t1")), SignedPermutation::generator(2, 1));
  std::size_t only_b = 0;
  for (const auto& x : ctx.elements())
    for (const auto& y : ctx.elements()) {
      EXPECT_EQ(to_signed(x * y), to_signed(x) * to_signed(y));
      const bool wr = bruhat_leq(x, y);
      const bool b = coxeterB_leq(to_signed(x), to_signed(y));
      if (wr) EXPECT_TRUE(b);
      if (b && !wr) ++only_b;
    }
  EXPECT_GT(only_b, 0u);
  EXPECT_TRUE(bruhat_leq(w("t1"), w("s1^1 t1")));
  EXPECT_TRUE(coxeterB_leq(to_signed(w("t1")), to_signed(w("s1^1 t1"))));
  EXPECT_FALSE(bruhat_leq(w("t1"), w("s1^2")));
  EXPECT_TRUE(coxeterB_leq(to_signed(w("t1")), to_signed(w("s1^2"))));
}

TEST(TypeB, ClassCountsMatchOracle) {
  for (std::size_t n = 2; n <= 4; ++n) {
    EXPECT_EQ(class_count_D(n), oracle::class_count(oracle::weyl_d(n)));
    EXPECT_EQ(class_count_B(n), oracle::bipartition_count(static_cast<int>(n)));
  }
  EXPECT_EQ(class_count_D(2), 4u);
  EXPECT_EQ(class_count_D(3), 5u);
  EXPECT_EQ(class_count_D(4), 13u);
}

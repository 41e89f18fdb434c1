#include <random>

#include <gtest/gtest.h>

#include "mzv/mzv.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {

WordCombo combo(std::initializer_list<std::pair<Composition, Rational>> terms) {
  WordCombo w;
  for (const auto& [c, q] : terms) w.add(c, q);
  return w;
}

Composition random_composition(std::mt19937& rng, int max_weight) {
  std::uniform_int_distribution<int> weight(1, max_weight);
  int w = weight(rng);
  std::vector<int> parts;
  while (w > 0) {
    std::uniform_int_distribution<int> part(1, std::min(w, 4));
    parts.push_back(part(rng));
    w -= parts.back();
  }
  return Composition(parts);
}

}  // namespace

TEST(Composition, WeightDepthAdmissibility) {
  const Composition c{3, 1, 2};
  EXPECT_EQ(c.weight(), 6);
  EXPECT_EQ(c.depth(), 3u);
  EXPECT_TRUE(c.is_admissible());
  EXPECT_FALSE((Composition{2, 1}).is_admissible());
  EXPECT_TRUE(Composition{}.is_admissible());
  EXPECT_EQ(Composition{}.weight(), 0);
  EXPECT_EQ((Composition{1, 2, 3}).reversed(), (Composition{3, 2, 1}));
  EXPECT_EQ((Composition{2, 1, 1}).trailing_ones(), 2u);
}

TEST(Composition, ParseAndRejects) {
  EXPECT_EQ(Composition::parse("5,3,1"), (Composition{5, 3, 1}));
  EXPECT_EQ(Composition::parse(" 2 , 3 "), (Composition{2, 3}));
  EXPECT_THROW(Composition::parse("0,2"), precondition_error);
  EXPECT_THROW(Composition::parse("1,,2"), precondition_error);
  EXPECT_THROW(Composition::parse("a"), precondition_error);
  EXPECT_THROW(Composition({2, -1}), precondition_error);
}

TEST(Composition, EnumerationOrder) {
  const auto all = compositions_up_to(4);
  ASSERT_EQ(all.size(), 15u);  // 2^w - 1 summed
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_TRUE(weight_lex_less(all[i - 1], all[i]));
  EXPECT_EQ(all.front(), Composition{1});
  EXPECT_EQ(compositions_of_weight(3).size(), 4u);
}

TEST(WordCombo, NoZeroCoefficientsStored) {
  WordCombo w;
  w.add(Composition{2}, Rational(1, 2));
  w.add(Composition{2}, Rational(-1, 2));
  EXPECT_TRUE(w.is_zero());
  EXPECT_EQ(w.size(), 0u);
}

TEST(Stuffle, IdentityElement) {
  EXPECT_EQ(stuffle(Composition{}, Composition{3, 2}), WordCombo(Composition{3, 2}));
  EXPECT_EQ(stuffle(Composition{3, 2}, Composition{}), WordCombo(Composition{3, 2}));
}

TEST(Stuffle, DepthOneProducts) {
  EXPECT_EQ(stuffle(Composition{2}, Composition{3}),
            combo({{Composition{2, 3}, 1}, {Composition{3, 2}, 1}, {Composition{5}, 1}}));
  EXPECT_EQ(stuffle(Composition{1}, Composition{2}),
            combo({{Composition{1, 2}, 1}, {Composition{2, 1}, 1}, {Composition{3}, 1}}));
}

// Truncated nested sums multiply exactly by the stuffle rule at every cutoff,
// so the product of two truncations must equal the truncation of the product.
TEST(Stuffle, DoubleSumSplitOracle) {
  PrecisionContext ctx(30);
  PrecisionContext::Scope scope(ctx);
  const Real tol("1e-30");
  for (long N : {50L, 1000L}) {
    for (const auto& [u, v] : std::vector<std::pair<Composition, Composition>>{
             {{2}, {3}}, {{1}, {2}}, {{1, 2}, {2, 1}}, {{3, 1, 2}, {1, 1}}}) {
      const Real lhs = oracle::truncated_sum_real(u, N) * oracle::truncated_sum_real(v, N);
      const Real rhs = oracle::truncated_combo(stuffle(u, v), N).re;
      EXPECT_LT(boost::multiprecision::abs(lhs - rhs), tol) << u.to_string() << " * " << v.to_string();
    }
  }
}

TEST(Stuffle, DoubleSumSplitConvergesToProduct) {
  PrecisionContext ctx(20);
  PrecisionContext::Scope scope(ctx);
  const Real value = eval_tpoly(regularize(stuffle(Composition{2}, Composition{3})), 0, ctx).value;
  const Real product = eval_admissible_mzv(Composition{2}, ctx).value * eval_admissible_mzv(Composition{3}, ctx).value;
  EXPECT_LT(boost::multiprecision::abs(value - product), Real("1e-20"));
}

TEST(Stuffle, CommutativeAndAssociativeOnRandomWords) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const auto u = random_composition(rng, 6);
    const auto v = random_composition(rng, 6);
    const auto w = random_composition(rng, 4);
    EXPECT_EQ(stuffle(u, v), stuffle(v, u));
    EXPECT_EQ(stuffle(stuffle(WordCombo(u), WordCombo(v)), WordCombo(w)),
              stuffle(WordCombo(u), stuffle(WordCombo(v), WordCombo(w))));
  }
}

TEST(StarExpand, Examples) {
  EXPECT_EQ(star_expand(Composition{5, 3, 1}),
            combo({{Composition{5, 3, 1}, 1}, {Composition{5, 4}, 1}, {Composition{8, 1}, 1}, {Composition{9}, 1}}));
  EXPECT_EQ(star_expand(Composition{7}), WordCombo(Composition{7}));
  EXPECT_EQ(star_expand(Composition{1, 1}), combo({{Composition{1, 1}, 1}, {Composition{2}, 1}}));
  EXPECT_EQ(star_expand(Composition{}), WordCombo::unit());
}

TEST(StarExpand, TermCountAndWeight) {
  for (const auto& c : compositions_up_to(7)) {
    const auto s = star_expand(c);
    EXPECT_EQ(s.size(), std::size_t{1} << (c.depth() - 1));
    for (const auto& [w, q] : s) {
      EXPECT_EQ(q, 1);
      EXPECT_EQ(w.weight(), c.weight());
    }
  }
}

TEST(ShiftExpand, Examples) {
  EXPECT_EQ(shift_expand(0, Composition{1, 2}), WordCombo(Composition{1, 2}));
  EXPECT_EQ(shift_expand(1, Composition{2}), combo({{Composition{3}, -2}}));
  EXPECT_EQ(shift_expand(1, Composition{1, 2}), combo({{Composition{2, 2}, -1}, {Composition{1, 3}, -2}}));
  EXPECT_EQ(shift_expand(0, Composition{}), WordCombo::unit());
  EXPECT_TRUE(shift_expand(2, Composition{}).is_zero());
  EXPECT_THROW(shift_expand(-1, Composition{2}), precondition_error);
}

TEST(ShiftExpand, WeightDepthAndSign) {
  for (const auto& c : compositions_up_to(5))
    for (int a = 0; a <= 4; ++a)
      for (const auto& [w, q] : shift_expand(a, c)) {
        EXPECT_EQ(w.weight(), c.weight() + a);
        EXPECT_EQ(w.depth(), c.depth());
        EXPECT_EQ(q > 0, a % 2 == 0);
      }
}

// zeta^*_a(c) is the z^a Taylor coefficient of the shifted nested sum; at a
// finite cutoff this holds term by term, so compare against a central difference.
TEST(ShiftExpand, NumericalTaylorOracle) {
  PrecisionContext ctx(40);
  PrecisionContext::Scope scope(ctx);
  const Real h("1e-15");
  for (const auto& c : {Composition{2}, Composition{1, 2}, Composition{2, 1, 3}}) {
    const long N = 300;
    const auto fd = oracle::derivative_at_zero([&](const ComplexHP& z) { return oracle::truncated_sum(c, N, z); }, h);
    const auto exact = oracle::truncated_combo(shift_expand(1, c), N);
    EXPECT_LT(abs(fd - exact), Real("1e-20")) << c.to_string();
  }
}

TEST(Regularize, Examples) {
  EXPECT_EQ(regularize(Composition{3, 2}), TPoly(WordCombo(Composition{3, 2})));
  TPoly t1;
  t1.add(1, WordCombo::unit());
  EXPECT_EQ(regularize(Composition{1}), t1);

  TPoly expected;
  expected.add(1, WordCombo(Composition{2}));
  expected.add(0, combo({{Composition{1, 2}, -1}, {Composition{3}, -1}}));
  EXPECT_EQ(regularize(Composition{2, 1}), expected);
  EXPECT_EQ(regularize(Composition{1}) * regularize(Composition{2}),
            regularize(stuffle(Composition{1}, Composition{2})));
}

TEST(Regularize, IdentityOnAdmissibleAndAdmissibleOutput) {
  for (const auto& c : compositions_up_to(7)) {
    const TPoly r = regularize(c);
    EXPECT_TRUE(r.all_admissible());
    if (c.is_admissible()) {
      EXPECT_EQ(r, TPoly(WordCombo(c)));
      EXPECT_EQ(r.degree(), 0);
    } else {
      EXPECT_EQ(r.degree(), static_cast<int>(c.trailing_ones()));
    }
  }
}

TEST(Regularize, HomomorphismSample) {
  const auto words = compositions_up_to(4);
  for (const auto& u : words)
    for (const auto& v : words)
      EXPECT_EQ(regularize(stuffle(u, v)), regularize(u) * regularize(v)) << u.to_string() << " * " << v.to_string();
}

TEST(Antipode, Examples) {
  EXPECT_EQ(antipode_combo(0, Composition{4, 1}), TPoly::one());
  EXPECT_TRUE(antipode_combo(1, Composition{5, 2}).is_zero());
  EXPECT_TRUE(antipode_combo(2, Composition{1, 2}).is_zero());
  EXPECT_THROW(antipode_combo(3, Composition{1, 2}), precondition_error);
  EXPECT_THROW(antipode_combo(-1, Composition{1, 2}), precondition_error);
}

TEST(Antipode, VanishesUpToWeightSix) {
  for (const auto& c : compositions_up_to(6))
    for (int j = 1; j <= static_cast<int>(c.depth()); ++j)
      EXPECT_TRUE(antipode_combo(j, c).is_zero()) << c.to_string() << " j=" << j;
}

#include <gtest/gtest.h>

#include "mzv/mzv.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {

bool opposite_parity(const Composition& c) { return (c.weight() - static_cast<int>(c.depth())) % 2 != 0; }

}  // namespace

TEST(ReduceMain, DepthOneIsEvenZeta) {
  PiGradedExpr expected;
  expected.add(2, TPoly::one(), Rational(1, 6));
  EXPECT_EQ(reduce_main(Composition{2}), expected);
  EXPECT_EQ(reduce_main3(Composition{2}), expected);
  PiGradedExpr z4;
  z4.add(4, TPoly::one(), Rational(1, 90));
  EXPECT_EQ(reduce_main(Composition{4}), z4);
}

TEST(ReduceMain, EulerIdentity) {
  const auto e = reduce_main(Composition{1, 2});
  PiGradedExpr expected;
  expected.add(0, TPoly(WordCombo(Composition{3})));
  EXPECT_EQ(e, expected);
  EXPECT_TRUE(expand_depth_certificate(e, 2));
}

TEST(ReduceMain, KnownDepthTwoFormula) {
  // With the largest summation index last, zeta(2,3) = 3 zeta(2) zeta(3) - 11/2 zeta(5).
  PrecisionContext ctx(30);
  PrecisionContext::Scope scope(ctx);
  const auto e = reduce_main(Composition{2, 3});
  EXPECT_EQ(e.t_degree(), 0);
  EXPECT_LE(e.max_depth(), 1u);
  const Real expected = 3 * oracle::zeta_em(2) * oracle::zeta_em(3) - Real(11) / 2 * oracle::zeta_em(5);
  EXPECT_LT(boost::multiprecision::abs(eval_pigraded(e, 0, ctx).value - expected), ctx.tolerance());
}

TEST(ReduceMain, Preconditions) {
  EXPECT_THROW(reduce_main(Composition{1, 1, 1}), precondition_error);
  EXPECT_THROW(reduce_main(Composition{2, 2}), precondition_error);
  EXPECT_THROW(reduce_main(Composition{2, 1}), precondition_error);
  EXPECT_THROW(reduce_main(Composition{}), precondition_error);
  EXPECT_THROW(reduce_main3(Composition{1, 1, 1}), precondition_error);
  try {
    reduce_main3(Composition{1, 1, 1});
  } catch (const precondition_error& e) {
    EXPECT_STREQ(e.what(), "weight and depth have the same parity");
  }
}

TEST(ReduceMain, StructuralInvariantsUpToWeightEight) {
  for (const auto& c : compositions_up_to(8)) {
    if (!c.is_admissible() || !opposite_parity(c)) continue;
    const auto e = reduce_main(c);
    EXPECT_EQ(e.t_degree(), 0) << c.to_string();
    EXPECT_TRUE(expand_depth_certificate(e, static_cast<int>(c.depth()))) << c.to_string();
    EXPECT_LE(e.max_pi_exp(), c.weight());
    for (const auto& [pe, p] : e) EXPECT_EQ(pe % 2, 0);
    EXPECT_EQ(e, reduce_main3(c)) << c.to_string();
  }
}

TEST(ReduceMain3, NonAdmissibleValueMatchesRegularization) {
  PrecisionContext ctx(30);
  PrecisionContext::Scope scope(ctx);
  for (const auto& c : {Composition{2, 1}, Composition{1, 1, 1, 1, 1, 1}, Composition{1, 1}, Composition{3, 1, 1, 1}}) {
    if (!opposite_parity(c)) continue;
    const auto e = reduce_main3(c);
    for (int t : {0, 1}) {
      const Real lhs = eval_tpoly(regularize(c), t, ctx).value;
      EXPECT_LT(boost::multiprecision::abs(eval_pigraded(e, t, ctx).value - lhs), ctx.tolerance())
          << c.to_string() << " T=" << t;
    }
  }
}

TEST(DepthCertificate, Examples) {
  PiGradedExpr word;
  word.add(0, TPoly(WordCombo(Composition{3, 2})));
  EXPECT_FALSE(expand_depth_certificate(word, 2));
  EXPECT_TRUE(expand_depth_certificate(word, 3));
  EXPECT_TRUE(expand_depth_certificate(reduce_main(Composition{2}), 1));
  EXPECT_TRUE(expand_depth_certificate(reduce_main(Composition{1, 2}), 2));
}

TEST(Main2, ResidualsVanishNumerically) {
  PrecisionContext ctx(30);
  PrecisionContext::Scope scope(ctx);
  const Real bound("1e-25");
  for (const auto& c : {Composition{2}, Composition{1}, Composition{1, 1}, Composition{1, 1, 1}, Composition{3, 1, 2}})
    for (int t : {0, 1})
      EXPECT_LT(boost::multiprecision::abs(eval_pigraded(build_main2_identity(c), t, ctx).value), bound)
          << c.to_string() << " T=" << t;
}

TEST(Main2, DeltaEntersForAllOnes) {
  // delta(1,1) = -pi^2/2 shows up as a bare pi^2 term.
  const auto display = main2_identity_display(Composition{1, 1});
  bool found = false;
  for (const auto& term : display)
    if (term.factors.empty() && term.pi_exp == 2) found = true;
  EXPECT_TRUE(found);
}

TEST(FundEq2, ResidualsVanishNumerically) {
  PrecisionContext ctx(30);
  PrecisionContext::Scope scope(ctx);
  for (const auto& c : {Composition{2}, Composition{1}, Composition{1, 1}, Composition{2, 1, 3}})
    for (int t : {0, 1})
      EXPECT_LT(boost::multiprecision::abs(eval_pigraded(fund_eq2_identity(c), t, ctx).value), Real("1e-25"))
          << c.to_string() << " T=" << t;
  EXPECT_THROW(fund_eq2_identity(Composition{}), precondition_error);
}

TEST(PiGradedExpr, TextRendering) {
  EXPECT_EQ(reduce_main(Composition{2}).to_string(), "1/6*pi^2");
  EXPECT_EQ(reduce_main(Composition{1, 2}).to_string(), "z(3)");
  EXPECT_EQ(PiGradedExpr{}.to_string(), "0");
}

#include <gtest/gtest.h>

#include "hybridyn/hybridyn.hpp"

using namespace hybridyn;

namespace {

const CoeffExpr half = CoeffExpr::rational(1, 2);

std::vector<Scheme> schemes() {
  auto p = preset_schemes();
  std::vector<Scheme> out(p.begin(), p.end());
  out.push_back({make_rational(1, 3), make_rational(-2), make_rational(5, 7)});
  return out;
}

}  // namespace

TEST(Commutator, Elementary) {
  EXPECT_EQ(commutator(x_Q(), p_Q()), i_hbar());
  EXPECT_EQ(commutator(p_Q(), x_Q()), -i_hbar());
  EXPECT_EQ(commutator(x_Q(), pow(p_Q(), 2)), CoeffExpr(2) * i_hbar() * p_Q());
  EXPECT_EQ(commutator(x_C(), p_C()), HybridExpr());
}

TEST(Poisson, Elementary) {
  EXPECT_EQ(poisson(x_C(), p_C()), HybridExpr(1));
  EXPECT_EQ(poisson(p_C(), x_C()), HybridExpr(-1));
  EXPECT_EQ(poisson(pow(x_C(), 2), pow(p_C(), 2)), CoeffExpr(4) * x_C() * p_C());
  EXPECT_EQ(poisson(x_C(0), p_C(1)), HybridExpr());
  EXPECT_EQ(poisson(x_Q(), p_Q()), HybridExpr());
}

TEST(Poisson, KeepsQuantumFactorsInWrittenOrder) {
  // ∂a/∂x ∂b/∂p with a = x_C p_Q, b = p_C x_Q gives p_Q x_Q.
  EXPECT_EQ(poisson(x_C() * p_Q(), p_C() * x_Q()), p_Q() * x_Q());
  EXPECT_EQ(poisson(x_C() * p_Q(), p_C() * x_Q()), x_Q() * p_Q() - i_hbar());
}

TEST(Sigma, SchemeConstants) {
  const Scheme s{make_rational(2), make_rational(3), make_rational(5)};
  EXPECT_EQ(sigma(x_C(), x_C(), s), HybridExpr(2));
  EXPECT_EQ(sigma(p_C(), p_C(), s), HybridExpr(3));
  EXPECT_EQ(sigma(x_C(), p_C(), s), HybridExpr(5));
  EXPECT_EQ(sigma(x_C(), p_C(), Scheme::weyl()), HybridExpr());
}

TEST(Sigma, SymmetricOnPureClassicalArguments) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomExprGenerator gen(seed);
    const HybridExpr a = gen.pure_classical(), b = gen.pure_classical();
    for (const Scheme& s : schemes()) EXPECT_EQ(sigma(a, b, s), sigma(b, a, s));
  }
}

TEST(Star, ClassicalCanonicalPair) {
  EXPECT_EQ(star(x_C(), p_C(), Scheme::weyl()), x_C() * p_C() + half * i_hbar());
  EXPECT_EQ(star(p_C(), x_C(), Scheme::weyl()), x_C() * p_C() - half * i_hbar());
  EXPECT_EQ(star(x_C(), x_C(), Scheme::husimi()), pow(x_C(), 2) + half * i_hbar());
}

TEST(Star, ReducesToOperatorProductOnQuantumArguments) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomExprGenerator gen(seed);
    const HybridExpr a = gen.pure_quantum(), b = gen.hybrid();
    for (const Scheme& s : schemes()) EXPECT_EQ(star(a, b, s), a * b);
  }
}

TEST(HybridBracket, CanonicalPairs) {
  for (const Scheme& s : schemes()) {
    EXPECT_EQ(hybrid_bracket(x_C(), p_C(), s), HybridExpr(1));
    EXPECT_EQ(hybrid_bracket(x_Q(), p_Q(), s), HybridExpr(1));
    EXPECT_EQ(hybrid_bracket(x_C(), p_Q(), s), HybridExpr());
  }
}

TEST(HybridBracket, Antisymmetric) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RandomExprGenerator gen(seed, {2, 2, 4, 2, 3});
    const HybridExpr a = gen.hybrid(), b = gen.hybrid();
    for (const Scheme& s : schemes()) EXPECT_EQ(hybrid_bracket(a, b, s), -hybrid_bracket(b, a, s)) << "seed " << seed;
  }
}

TEST(HybridBracket, Bilinear) {
  const CoeffExpr lambda = CoeffExpr::rational(-3, 4) * CoeffExpr::param(Param::k);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    RandomExprGenerator gen(seed);
    const HybridExpr a = gen.hybrid(), b = gen.hybrid(), c = gen.hybrid();
    for (const Scheme& s : schemes()) {
      EXPECT_EQ(hybrid_bracket(a + b, c, s), hybrid_bracket(a, c, s) + hybrid_bracket(b, c, s));
      EXPECT_EQ(hybrid_bracket(a, b + c, s), hybrid_bracket(a, b, s) + hybrid_bracket(a, c, s));
      EXPECT_EQ(hybrid_bracket(lambda * a, b, s), lambda * hybrid_bracket(a, b, s));
    }
  }
}

TEST(HybridBracket, ExpandedFormAgrees) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    RandomExprGenerator gen(seed, {3, 3, 3, 2, 3});
    const HybridExpr a = gen.hybrid(), b = gen.hybrid();
    for (const Scheme& s : schemes())
      EXPECT_EQ(hybrid_bracket(a, b, s), hybrid_bracket_expanded(a, b, s)) << "seed " << seed;
  }
}

TEST(HybridBracket, ReducesWhenOneArgumentIsPure) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RandomExprGenerator gen(seed);
    const HybridExpr a = gen.hybrid();
    const HybridExpr c = gen.pure_classical();
    const HybridExpr q = gen.pure_quantum();
    for (const Scheme& s : schemes()) {
      EXPECT_EQ(hybrid_bracket(a, c, s), poisson(a, c)) << "seed " << seed;
      EXPECT_EQ(hybrid_bracket(a, q, s), detail::inverse_i_hbar() * commutator(a, q)) << "seed " << seed;
      EXPECT_TRUE(reduce_check(a, c + q, s).holds());
    }
  }
}

TEST(HybridBracket, ReduceCheckRejectsMixedArgument) {
  EXPECT_THROW(reduce_check(x_C(), x_C() * x_Q(), Scheme::weyl()), NotPureError);
}

TEST(HybridBracket, MixedArgumentsDependOnScheme) {
  const HybridExpr a = x_C() * x_Q();
  const HybridExpr b = x_C() * p_Q();
  // only the σ part differs: (1/2)(x_Q p_Q - p_Q x_Q)
  const HybridExpr diff = hybrid_bracket(a, b, Scheme::husimi()) - hybrid_bracket(a, b, Scheme::weyl());
  EXPECT_EQ(diff, half * i_hbar());
}

TEST(Scheme, ParsesNamesAndTriples) {
  EXPECT_EQ(parse_scheme("weyl"), Scheme::weyl());
  EXPECT_EQ(parse_scheme("husimi"), Scheme::husimi());
  EXPECT_EQ(parse_scheme("0,0,1"), (Scheme{0, 0, 1}));
  EXPECT_EQ(parse_scheme("1/2, 0.5, -3"), (Scheme{make_rational(1, 2), make_rational(1, 2), make_rational(-3)}));
  EXPECT_THROW(parse_scheme("0,1"), std::invalid_argument);
  EXPECT_THROW(parse_scheme("moyal"), std::invalid_argument);
  EXPECT_EQ((Scheme{0, 0, 1}).name(), "0,0,1");
}

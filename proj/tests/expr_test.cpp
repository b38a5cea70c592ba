#include <gtest/gtest.h>

#include "hybridyn/hybridyn.hpp"

using namespace hybridyn;

namespace {

HybridExpr raw_word(std::vector<Generator> w, CoeffExpr c = CoeffExpr(1)) {
  return HybridExpr::raw_term(std::move(c), {}, QuantumWord(std::move(w)));
}

const Generator xq = quantum_position(0);
const Generator pq = quantum_momentum(0);

HybridExpr ihbar() { return i_hbar(); }

}  // namespace

TEST(Normalize, CanonicalCommutationRelation) {
  // p x = x p - iħ
  EXPECT_EQ(normalize(raw_word({pq, xq})), x_Q() * p_Q() - ihbar());
  EXPECT_EQ(p_Q() * x_Q(), x_Q() * p_Q() - ihbar());
}

TEST(Normalize, ThreeLetterWord) {
  // p x p = x p² - iħ p
  EXPECT_EQ(normalize(raw_word({pq, xq, pq})), x_Q() * pow(p_Q(), 2) - ihbar() * p_Q());
  // p² x² = x² p² - 4iħ x p - 2ħ²
  const HybridExpr expected = pow(x_Q(), 2) * pow(p_Q(), 2) - CoeffExpr(4) * ihbar() * x_Q() * p_Q() +
                              CoeffExpr(2) * ihbar() * ihbar();
  EXPECT_EQ(normalize(raw_word({pq, pq, xq, xq})), expected);
}

TEST(Normalize, IsIdempotentOnRandomRawExpressions) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    RandomExprGenerator gen(seed, {2, 4, 5, 2, 3});
    const HybridExpr raw = gen.raw();
    const HybridExpr once = normalize(raw);
    EXPECT_TRUE(once.is_normal());
    EXPECT_EQ(normalize(once), once) << "seed " << seed;
  }
}

TEST(Normalize, MatchesMatrixRepresentationOfRawWords) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomExprGenerator gen(seed, {1, 4, 5, 1, 3});
    const HybridExpr raw = gen.raw();
    SampleGenerator samples(seed);
    const Representation r = samples.representation(1, 1, quantum_degree(raw));
    EXPECT_LT(interior_distance(raw, normalize(raw), r), 1e-9) << "seed " << seed;
  }
}

TEST(Normalize, DifferentDofsCommute) {
  EXPECT_EQ(p_Q(1) * x_Q(0), x_Q(0) * p_Q(1));
  EXPECT_EQ(commutator(p_Q(1), x_Q(0)), HybridExpr());
  EXPECT_EQ(commutator(x_Q(1), p_Q(1)), ihbar());
}

TEST(Algebra, ProductIsAssociativeAndDistributive) {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    RandomExprGenerator gen(seed, {2, 2, 4, 2, 2});
    const HybridExpr a = gen.hybrid(), b = gen.hybrid(), c = gen.hybrid();
    EXPECT_EQ((a * b) * c, a * (b * c)) << "seed " << seed;
    EXPECT_EQ(a * (b + c), a * b + a * c) << "seed " << seed;
    EXPECT_EQ((a + b) * c, a * c + b * c) << "seed " << seed;
  }
}

TEST(Algebra, AdditionGroupLaws) {
  RandomExprGenerator gen(7);
  const HybridExpr a = gen.hybrid(), b = gen.hybrid();
  EXPECT_EQ(a + b, b + a);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a + HybridExpr(), a);
  EXPECT_EQ(HybridExpr(1) * a, a);
}

TEST(Algebra, ClassicalGeneratorsCommuteWithEverything) {
  EXPECT_EQ(x_C() * p_Q(), p_Q() * x_C());
  EXPECT_EQ(p_C() * x_C(), x_C() * p_C());
}

TEST(Algebra, ClassicalDerivative) {
  const HybridExpr e = pow(x_C(), 3) * p_C() * x_Q() + CoeffExpr(5) * p_C();
  EXPECT_EQ(d_classical(e, classical_position(0)), CoeffExpr(3) * pow(x_C(), 2) * p_C() * x_Q());
  EXPECT_EQ(d_classical(e, classical_momentum(0)), pow(x_C(), 3) * x_Q() + HybridExpr(5));
  EXPECT_THROW(d_classical(e, quantum_position(0)), std::invalid_argument);
}

TEST(Sectors, Classification) {
  EXPECT_TRUE(is_pure_classical(x_C() * p_C()));
  EXPECT_TRUE(is_pure_quantum(x_Q() * p_Q()));
  EXPECT_TRUE(is_additive(x_C() + x_Q()));
  EXPECT_FALSE(is_additive(x_C() * x_Q()));
  EXPECT_TRUE(is_pure(HybridExpr(3)));
  const SectorSplit s = split_sectors(x_C() + p_Q() + HybridExpr(2));
  EXPECT_EQ(s.classical, x_C() + HybridExpr(2));
  EXPECT_EQ(s.quantum, p_Q());
  EXPECT_THROW(split_sectors(x_C() * x_Q()), std::invalid_argument);
}

TEST(Print, CanonicalText) {
  EXPECT_EQ(to_string(HybridExpr()), "0");
  EXPECT_EQ(to_string(x_Q() * pow(p_Q(), 2) - ihbar() * p_Q()), "x_Q*p_Q^2 - i*hbar*p_Q");
  EXPECT_EQ(to_string(CoeffExpr::rational(1, 2) * pow(p_C(), 2)), "(1/2)*p_C^2");
  EXPECT_EQ(to_string(CoeffExpr::param(Param::m_C, -1) * p_C()), "m_C^-1*p_C");
  EXPECT_EQ(to_string(x_C(1) * p_Q(2)), "x_C[1]*p_Q[2]");
  EXPECT_EQ(to_string((CoeffExpr(1) + CoeffExpr::atom(TimeAtom::cos_wt)) * x_C()), "(1 + cos(w*t))*x_C");
  EXPECT_EQ(to_string(HybridExpr(Gaussian(make_rational(2), make_rational(3))) * x_Q()), "(2 + 3*i)*x_Q");
}

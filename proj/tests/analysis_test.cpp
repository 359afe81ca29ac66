#include "generators.hpp"
#include "racah/algebra.hpp"
#include "racah/analysis.hpp"
#include "racah/expr.hpp"
#include "racah/linear.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace racah {
namespace {

using namespace gen;
using testing::kSeed;

NcPoly P(const char* text) { return expr::parse(text); }

TEST(Degree, Examples) {
  EXPECT_EQ(degree(D()), FiltrationDegree(2));
  EXPECT_EQ(degree(B() * A()), FiltrationDegree(2));
  EXPECT_EQ(degree(commutator(A(), B())), FiltrationDegree(2));
  EXPECT_EQ(degree(P("A D B alpha")), FiltrationDegree(5));
  EXPECT_EQ(degree(NcPoly(5)), FiltrationDegree(0));
  EXPECT_EQ(degree(named("Omega_A")), FiltrationDegree(4));
}

TEST(Degree, ZeroSentinel) {
  FiltrationDegree z = degree(A() - A());
  EXPECT_TRUE(z.is_zero_sentinel());
  EXPECT_TRUE(z.at_most(0));
  EXPECT_LT(z, FiltrationDegree(0));
  EXPECT_EQ(z.to_string(), "-inf");
  EXPECT_FALSE(FiltrationDegree(3).at_most(2));
}

TEST(MonomialCount, MatchesClosedFormOracle) {
  const std::size_t expected[] = {1, 6, 22, 62, 148, 314, 610};
  for (unsigned n = 0; n <= 6; ++n) {
    EXPECT_EQ(monomial_count(n), expected[n]);
    EXPECT_EQ(monomial_count(n), testing::pbw_count_oracle(n));
  }
  EXPECT_EQ(monomial_count(8), testing::pbw_count_oracle(8));
}

TEST(MonomialCount, TuplesAreDistinctAndWithinBound) {
  auto tuples = normal_tuples(5);
  std::set<ExponentTuple> unique(tuples.begin(), tuples.end());
  EXPECT_EQ(unique.size(), tuples.size());
  for (const auto& t : tuples)
    EXPECT_LE(t.weight(), 5u);
}

TEST(LeadingTerm, Examples) {
  LeadingTerm lt = leading_term(B() * A());
  EXPECT_EQ(lt.tuple, (Word{Letter::A, Letter::B}).exponents());
  EXPECT_EQ(lt.coefficient, Rational(1));

  // D and A B both have weight 2; (1,0,1,...) beats (0,1,0,...).
  lt = leading_term(NcPoly(3) * D() + NcPoly(-2) * A() * B());
  EXPECT_EQ(lt.tuple, (Word{Letter::A, Letter::B}).exponents());
  EXPECT_EQ(lt.coefficient, Rational(-2));

  lt = leading_term(named("Omega_A"));
  EXPECT_EQ(lt.tuple, (Word{Letter::D, Letter::D}).exponents());
  EXPECT_THROW(leading_term(NcPoly()), ZeroPolynomial);
}

TEST(LeadingTerm, SampledProductsAreMultiplicative) {
  EXPECT_TRUE(leading_multiplicativity_check(200, 4, kSeed));
}

TEST(FiltrationProperty, ProductDegreeIsAdditive) {
  std::mt19937_64 rng(kSeed + 10);
  for (int n = 0; n < 100; ++n) {
    NcPoly u = random_normal_polynomial(rng, 3);
    NcPoly v = random_normal_polynomial(rng, 3);
    NcPoly uv = reduce(u * v);
    ASSERT_FALSE(uv.is_zero());
    EXPECT_EQ(degree(uv).value(), degree(u).value() + degree(v).value());
  }
}

TEST(FiltrationProperty, StableUnderD6) {
  std::mt19937_64 rng(kSeed + 11);
  const auto elements = d6_elements();
  for (int n = 0; n < 40; ++n) {
    NcPoly p = random_normal_polynomial(rng, 4);
    for (const D6Element& g : elements)
      EXPECT_TRUE(degree(apply(g.realized(), p)).at_most(degree(p).value())) << g.name();
  }
}

TEST(CommutatorDegree, Examples) {
  EXPECT_EQ(reduce(commutator(A(), B())), NcPoly(2) * D());
  EXPECT_EQ(reduce(commutator(A(), NcPoly(1))), NcPoly());
  EXPECT_TRUE(commutator_degree_checks(0, 0, 1));
  EXPECT_TRUE(commutator_degree_checks(2, 1, 2));
}

TEST(OmegaPowers, Congruence) {
  EXPECT_TRUE(degree(named("Omega_A") - D() * D()).at_most(3));
  EXPECT_TRUE(omega_power_congruence(0));
  EXPECT_TRUE(omega_power_congruence(2));
  auto powers = omega_powers(2);
  ASSERT_EQ(powers.size(), 3u);
  EXPECT_EQ(powers[0], NcPoly(1));
  EXPECT_EQ(powers[2], reduce(pow(named("Omega_A"), 2)));
}

TEST(Linear, RankAndNullspace) {
  EXPECT_EQ(linear::rank({A(), B(), A() + B()}), 2u);
  EXPECT_EQ(linear::rank({}), 0u);
  EXPECT_EQ(linear::rank({NcPoly()}), 0u);
  EXPECT_EQ(linear::rank({A() * Rational(1, 3), B(), D()}), 3u);

  // Columns (1,2), (2,4), (0,1): kernel spanned by (2,-1,0).
  linear::SparseVector c0{{0, 1}, {1, 2}}, c1{{0, 2}, {1, 4}}, c2{{1, 1}};
  auto kernel = linear::nullspace({c0, c1, c2});
  ASSERT_EQ(kernel.size(), 1u);
  mpz_class x = 0, y = 0, z = 0;
  for (const auto& [i, v] : kernel[0])
    (i == 0 ? x : i == 1 ? y : z) = v;
  EXPECT_EQ(z, 0);
  EXPECT_EQ(x, -2 * y);
  EXPECT_NE(x, 0);
}

class CenterBound : public ::testing::TestWithParam<unsigned> {};

TEST_P(CenterBound, KernelMatchesOmegaMonomials) {
  const unsigned n = GetParam();
  CenterReport report = center_basis(n);
  EXPECT_EQ(report.bound, n);
  EXPECT_EQ(report.expected_dimension, testing::center_count_oracle(n));
  EXPECT_EQ(report.kernel_dimension, report.expected_dimension);
  EXPECT_TRUE(report.matches);
  ASSERT_EQ(report.basis.size(), report.kernel_dimension);
  for (const NcPoly& z : report.basis) {
    EXPECT_TRUE(degree(z).at_most(n));
    for (const NcPoly& g : {A(), B(), C(), D()})
      EXPECT_EQ(reduce(commutator(g, z)), NcPoly());
  }
}

INSTANTIATE_TEST_SUITE_P(Bounds, CenterBound, ::testing::Range(0u, 6u));

TEST(Center, ExpectedDimensions) {
  const std::size_t expected[] = {1, 4, 10, 20, 36, 60, 94, 140, 201};
  for (unsigned n = 0; n <= 8; ++n) {
    EXPECT_EQ(center_tuples(n).size(), expected[n]);
    EXPECT_EQ(testing::center_count_oracle(n), expected[n]);
  }
}

TEST(Center, BoundTooLarge) {
  EXPECT_THROW(center_basis(7), BoundTooLarge);
  AnalysisLimits tight;
  tight.center_bound = 2;
  EXPECT_THROW(center_basis(3, tight), BoundTooLarge);
  EXPECT_NO_THROW(center_basis(2, tight));
}

TEST(Independence, Examples) {
  EXPECT_TRUE(algebraic_independence_check(0));
  EXPECT_EQ(omega_central_monomials(4).size(), 36u);
  EXPECT_TRUE(algebraic_independence_check(4));
}

TEST(Independence, WeightEight) {
  EXPECT_EQ(omega_central_monomials(8).size(), testing::center_count_oracle(8));
  EXPECT_TRUE(algebraic_independence_check(8));
  EXPECT_THROW(algebraic_independence_check(9), BoundTooLarge);
}

TEST(PbwOmega, Examples) {
  EXPECT_EQ(pbw_omega_tuples(0).size(), 1u);
  EXPECT_EQ(pbw_omega_tuples(1).size(), 6u);
  EXPECT_TRUE(pbw_omega_basis_check(0));
  EXPECT_TRUE(pbw_omega_basis_check(1));
}

TEST(PbwOmega, BoundFour) {
  EXPECT_EQ(pbw_omega_tuples(4).size(), testing::pbw_count_oracle(4));
  EXPECT_TRUE(pbw_omega_basis_check(4));
  EXPECT_THROW(pbw_omega_basis_check(6), BoundTooLarge);
}

} // namespace
} // namespace racah

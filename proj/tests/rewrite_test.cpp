#include "generators.hpp"
#include "racah/algebra.hpp"
#include "racah/expr.hpp"
#include "racah/rewrite.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace racah {
namespace {

using namespace gen;
using testing::kSeed;

NcPoly P(const char* text) { return expr::parse(text); }

TEST(ReductionSystem, FifteenRulesOnDescendingPairs) {
  const auto& rules = default_system().rules();
  EXPECT_EQ(rules.size(), 15u);
  std::set<Word> lhs;
  for (const auto& r : rules) {
    ASSERT_EQ(r.lhs.size(), 2u);
    EXPECT_GT(rank(r.lhs[0]), rank(r.lhs[1]));
    EXPECT_TRUE(r.rhs.is_normal());
    lhs.insert(r.lhs);
  }
  EXPECT_EQ(lhs.size(), 15u);
  EXPECT_EQ(default_system().inclusion_ambiguity_count(), 0u);
}

TEST(ReductionSystem, RightHandSides) {
  const auto& sys = default_system();
  EXPECT_EQ(sys.rule_for(Letter::B, Letter::A)->rhs, P("A B - 2 D"));
  EXPECT_EQ(sys.rule_for(Letter::D, Letter::A)->rhs,
            P("A D + A delta - A^2 - 2 A B + 2 D - alpha"));
  EXPECT_EQ(sys.rule_for(Letter::B, Letter::D)->rhs,
            P("D B + B delta - B^2 - 2 A B + 2 D + beta"));
  EXPECT_EQ(sys.rule_for(Letter::Beta, Letter::A)->rhs, A() * beta());
  EXPECT_EQ(sys.rule_for(Letter::A, Letter::B), nullptr);
}

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce(B() * A()), P("A B - 2 D"));
  EXPECT_EQ(reduce(A() * B()), A() * B());
  EXPECT_EQ(reduce(beta() * alpha() * A()), A() * alpha() * beta());
  EXPECT_EQ(reduce(NcPoly()), NcPoly());
  EXPECT_EQ(reduce(NcPoly(Rational(3, 2))), NcPoly(Rational(3, 2)));
}

TEST(Reduce, BdaGoldenValue) {
  NcPoly expected = P("A D B - 2 D^2 - 3 A^2 B - 3 A B^2 + 6 A D + 6 D B + 2 A B delta - 2 D delta"
                      " - 2 A^2 - 2 B^2 - 8 A B + A beta + 2 A delta - B alpha + 2 B delta"
                      " + 8 D - 2 alpha + 2 beta");
  EXPECT_EQ(expected.size(), 18u);
  NcPoly bda = B() * D() * A();
  EXPECT_EQ(reduce(bda), expected);
  EXPECT_EQ(default_system().reduce(bda, Strategy::Rightmost), expected);
}

TEST(Reduce, CommutatorRelationsHold) {
  EXPECT_EQ(reduce(commutator(A(), B()) - NcPoly(2) * D()), NcPoly());
  EXPECT_EQ(reduce(commutator(B(), C()) - NcPoly(2) * D()), NcPoly());
  EXPECT_EQ(reduce(commutator(C(), A()) - NcPoly(2) * D()), NcPoly());
}

TEST(Reduce, FuelExhausted) {
  ReductionSystem tiny(3);
  NcPoly w = pow(B(), 3) * pow(A(), 3);
  EXPECT_THROW(tiny.reduce(w), FuelExhausted);
  ReductionSystem ample(kDefaultFuel);
  EXPECT_NO_THROW(ample.reduce(w));
}

TEST(Confluence, TwentyResolvableOverlaps) {
  auto reports = check_confluence();
  EXPECT_EQ(reports.size(), 20u);
  std::set<Word> words;
  for (const auto& r : reports) {
    EXPECT_TRUE(r.resolvable) << r.overlap_word;
    EXPECT_EQ(r.left_path_result, r.right_path_result) << r.overlap_word;
    words.insert(r.overlap_word);
  }
  EXPECT_EQ(words.size(), 20u);
  EXPECT_TRUE(words.count(Word{Letter::B, Letter::D, Letter::A}));
}

TEST(Confluence, OverlapsAreTheDescendingTriples) {
  // C(6,3) strictly decreasing triples.
  std::size_t count = 0;
  for (Letter x : kAllLetters)
    for (Letter y : kAllLetters)
      for (Letter z : kAllLetters)
        if (rank(x) > rank(y) && rank(y) > rank(z))
          ++count;
  EXPECT_EQ(count, check_confluence().size());
}

TEST(ReduceProperty, NormalFormsAreIdempotentAndNormal) {
  std::mt19937_64 rng(kSeed);
  for (int n = 0; n < 200; ++n) {
    NcPoly p = testing::random_free_polynomial(rng, 6);
    NcPoly r = reduce(p);
    EXPECT_TRUE(r.is_normal());
    EXPECT_EQ(reduce(r), r);
  }
}

TEST(ReduceProperty, StrategyIndependence) {
  std::mt19937_64 rng(kSeed + 1);
  const auto& sys = default_system();
  for (int n = 0; n < 200; ++n) {
    Word w = testing::random_word(rng, 8);
    EXPECT_EQ(sys.reduce_word(w, Strategy::Leftmost), sys.reduce_word(w, Strategy::Rightmost))
        << w;
  }
}

TEST(ReduceProperty, Homomorphism) {
  std::mt19937_64 rng(kSeed + 2);
  for (int n = 0; n < 150; ++n) {
    NcPoly u = testing::random_free_polynomial(rng, 4, 3);
    NcPoly v = testing::random_free_polynomial(rng, 4, 3);
    EXPECT_EQ(reduce(u * v), reduce(reduce(u) * reduce(v)));
    EXPECT_EQ(reduce(u + v), reduce(u) + reduce(v));
  }
}

TEST(ReduceProperty, TerminatesUpToLengthTen) {
  std::mt19937_64 rng(kSeed + 3);
  const auto& sys = default_system();
  for (int n = 0; n < 100; ++n) {
    Word w = testing::random_word(rng, 10);
    std::uint64_t steps = sys.count_steps(NcPoly(w));
    EXPECT_LT(steps, kDefaultFuel);
    EXPECT_EQ(steps == 0, w.is_normal());
  }
}

TEST(ReduceProperty, CentralLettersCommute) {
  std::mt19937_64 rng(kSeed + 4);
  for (int n = 0; n < 100; ++n) {
    NcPoly p = testing::random_free_polynomial(rng, 5);
    for (const NcPoly& z : {alpha(), beta(), delta()})
      EXPECT_EQ(reduce(commutator(z, p)), NcPoly());
  }
}

} // namespace
} // namespace racah

#include <gtest/gtest.h>

#include <random>

#include "denum/floor_sum.hpp"
#include "oracles.hpp"

namespace denum {
namespace {

using testing::brute_floor_sum;

TEST(FloorSumNaive, Examples) {
  EXPECT_EQ(floor_sum_naive({129, 281, 742}), 3111);
  EXPECT_EQ(floor_sum_naive({3, 1, 5}), 0);
  EXPECT_EQ(floor_sum_naive({5, 5, 11}), 4);
}

TEST(FloorSumNaive, WidePathMatchesWordPath) {
  // Operands above the machine-word cutoff go through the ExactInt loop.
  const ExactInt big = ExactInt(1) << 40;
  EXPECT_EQ(floor_sum_naive({5, big + 1, big}), 15);
  EXPECT_EQ(floor_sum_naive({3, 3 * big, 2 * big}), 1 + 3 + 4);
}

TEST(FloorSumFast, PaperSums) {
  EXPECT_EQ(floor_sum_fast({129, 281, 742}), 3111);
  EXPECT_EQ(floor_sum_fast({539, 621, 803}), 112277);
  EXPECT_EQ(floor_sum_fast({335, 602, 663}), 50934);
  EXPECT_EQ(floor_sum_fast({1, 5, 3}), 1);
}

TEST(FloorSumFast, DegenerateInputs) {
  EXPECT_EQ(floor_sum_fast({0, 7, 3}), 0);
  EXPECT_EQ(floor_sum_fast({9, 0, 3}), 0);
  EXPECT_EQ(floor_sum_fast({9, 4, 1}), 4 * 45);
  EXPECT_THROW(floor_sum_fast({3, 1, 0}), invalid_argument);
  EXPECT_THROW(floor_sum_fast({-1, 1, 3}), invalid_argument);
}

TEST(FloorSumFast, ExhaustiveAgainstBruteForce) {
  // Includes gcd(a, c) > 1, c >= a and b >= a, which go through the wrapper.
  for (std::int64_t a = 1; a <= 60; ++a)
    for (std::int64_t c = 0; c <= 2 * a + 1; ++c)
      for (std::int64_t b = 0; b <= 2 * a + 1; ++b)
        ASSERT_EQ(floor_sum_fast({b, c, a}), brute_floor_sum(b, c, a))
            << "b=" << b << " c=" << c << " a=" << a;
}

TEST(FloorSumFast, CoprimeCoreExhaustive) {
  for (std::int64_t a = 1; a <= 150; ++a)
    for (std::int64_t c = 0; c < a; ++c) {
      if (testing::gcd64(a, c) != 1) continue;
      for (std::int64_t b = 0; b < a; ++b) {
        ASSERT_EQ(floor_sum_reciprocity({b, c, a}), brute_floor_sum(b, c, a));
        const FloorSumTrace t = floor_sum_trace({b, c, a});
        ASSERT_LE(t.reciprocity_steps(), reciprocity_step_bound(a, c));
        ASSERT_EQ(t.replay(floor_sum_naive(t.terminal)), t.value);
      }
    }
}

TEST(FloorSumFast, CoreRejectsNonCoprime) {
  EXPECT_THROW(floor_sum_reciprocity({3, 4, 6}), invariant_violation);
  EXPECT_THROW(floor_sum_reciprocity({7, 4, 6}), invalid_argument);
  // The wrapper normalizes the same query instead.
  EXPECT_EQ(floor_sum_fast({3, 4, 6}), brute_floor_sum(3, 4, 6));
}

TEST(FloorSumFast, RandomWideAgreesWithGeneric) {
  std::mt19937_64 rng(2024);
  const std::uint64_t mask = (std::uint64_t{1} << 60) - 1;
  for (int i = 0; i < 3000; ++i) {
    const ExactInt a = (rng() & mask) | 2;
    const ExactInt b = ExactInt(rng()) % a;
    ExactInt c;
    do c = ExactInt(rng()) % a;
    while (gcd(a, c) != 1);
    const FloorSumQuery q{b, c, a};
    const FloorSumTrace t = floor_sum_trace(q);
    ASSERT_EQ(t.value, floor_sum_generic(q));
    ASSERT_EQ(floor_sum_fast(q), t.value);
    ASSERT_LE(t.reciprocity_steps(), reciprocity_step_bound(a, c));
  }
}

TEST(FloorSumFast, RandomGeneralQueriesAgreeWithGeneric) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    const ExactInt a = ExactInt(rng() % 1'000'000'000) + 1;
    const ExactInt b = ExactInt(rng()) * (rng() % 1000);
    const ExactInt c = ExactInt(rng()) * (rng() % 1000);
    ASSERT_EQ(floor_sum_fast({b, c, a}), floor_sum_generic({b, c, a}));
  }
}

TEST(FloorSumFast, FibonacciWorstCaseStaysWithinBound) {
  ExactInt lo = 1, hi = 2;
  for (int k = 0; k < 85; ++k) {
    const FloorSumTrace t = floor_sum_trace({hi - 1, lo, hi});
    ASSERT_LE(t.reciprocity_steps(), reciprocity_step_bound(hi, lo)) << "a=" << hi;
    ASSERT_EQ(t.value, floor_sum_generic({hi - 1, lo, hi}));
    lo = std::exchange(hi, hi + lo);
  }
}

TEST(FloorSumGeneric, HandlesNonCoprime) {
  EXPECT_EQ(floor_sum_generic({10, 6, 4}), brute_floor_sum(10, 6, 4));
  EXPECT_EQ(linear_floor_sum(4, 3, 2, 1), 0 + 1 + 1 + 2);
}

TEST(FloorSumTrace, PaperChain) {
  const FloorSumTrace t = floor_sum_trace({129, 281, 742});
  ASSERT_GE(t.steps.size(), 2u);
  EXPECT_EQ(t.steps[0].kind, StepKind::reciprocity);
  EXPECT_EQ(t.steps[0].factor, 48);
  EXPECT_EQ(t.steps[0].constant, 6192);
  EXPECT_EQ(t.steps[0].next, (FloorSumQuery{48, 742, 281}));
  EXPECT_EQ(t.steps[1].kind, StepKind::division);
  EXPECT_EQ(t.steps[1].factor, 2);
  EXPECT_EQ(t.steps[1].constant, 2352);
  EXPECT_EQ(t.steps[1].next, (FloorSumQuery{48, 180, 281}));
  EXPECT_EQ(t.value, 3111);
}

TEST(FloorSumTrace, ShortChain) {
  const FloorSumTrace t = floor_sum_trace({3, 13, 22});
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].constant, 3);
  EXPECT_EQ(t.terminal, (FloorSumQuery{1, 22, 13}));
  EXPECT_EQ(t.terminal_value, 1);
  EXPECT_EQ(t.terminal_sign, -1);
  EXPECT_EQ(t.value, 2);
  EXPECT_EQ(render_trace(t), "RECIP K=1 const=3\nBASE value=2\n");
}

TEST(FloorSumTrace, WrapperStepsRenderAndReplay) {
  // c >= a adds a leading division step, b >= a a period step.
  const FloorSumTrace t = floor_sum_trace({40, 50, 7});
  ASSERT_GE(t.steps.size(), 2u);
  EXPECT_EQ(t.steps[0].kind, StepKind::division);
  EXPECT_EQ(t.steps[0].factor, 7);
  EXPECT_EQ(t.steps[1].kind, StepKind::period);
  EXPECT_EQ(t.value, brute_floor_sum(40, 50, 7));
  EXPECT_EQ(t.replay(floor_sum_naive(t.terminal)), t.value);
  EXPECT_NE(render_trace(t).find("PERIOD m=5 const="), std::string::npos);
}

TEST(Lemma4, Examples) {
  const IdentityReport r1 = lemma4_check(3, 1, 2);
  EXPECT_TRUE(r1.holds);
  EXPECT_EQ(*r1.find("K"), 0);
  EXPECT_EQ(r1.rhs, 0);

  const IdentityReport r2 = lemma4_check(5, 3, 4);
  EXPECT_EQ(*r2.find("K"), 2);
  EXPECT_EQ(*r2.find("sum_b"), 3);
  EXPECT_EQ(*r2.find("sum_K"), 3);
  EXPECT_EQ(r2.lhs, 6);
  EXPECT_TRUE(r2.holds);

  const IdentityReport r3 = lemma4_check(742, 129, 281);
  EXPECT_EQ(*r3.find("sum_b"), 3111);
  EXPECT_EQ(r3.rhs, 6192);
  EXPECT_TRUE(r3.holds);
}

TEST(Lemma4, Preconditions) {
  EXPECT_THROW(lemma4_check(5, 5, 2), invalid_argument);
  EXPECT_THROW(lemma4_check(5, 2, 5), invalid_argument);
  EXPECT_THROW(lemma4_check(6, 2, 4), invalid_argument);
}

TEST(Lemma4, HoldsExhaustivelyForSmallDenominators) {
  for (std::int64_t a = 1; a <= 80; ++a)
    for (std::int64_t c = 0; c < a; ++c) {
      if (testing::gcd64(a, c) != 1) continue;
      for (std::int64_t b = 0; b < a; ++b) ASSERT_TRUE(lemma4_check(a, b, c).holds);
    }
}

TEST(StepBound, Values) {
  EXPECT_EQ(reciprocity_step_bound(1, 0), 4u);
  EXPECT_EQ(reciprocity_step_bound(2, 1), 6u);
  EXPECT_EQ(reciprocity_step_bound(742, 281), 2u * 10 + 4);
  EXPECT_EQ(reciprocity_step_bound(1024, 3), 2u * 10 + 4);
}

}  // namespace
}  // namespace denum

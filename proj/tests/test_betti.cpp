#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace cochordal;
using namespace cochordal::testing;

namespace {

std::vector<BigInt> recursive_vector(const TypeSequence& t) {
  std::vector<BigInt> out;
  for (std::uint64_t i = 1; i <= pd_from_type(t); ++i) out.push_back(betti_recursive(t, i));
  return out;
}

}  // namespace

TEST(BettiFromType, ExampleFixtures) {
  const TypeSequence first{2, 2, 2};
  const TypeSequence second{4, 2};
  EXPECT_EQ(betti_vector(first), big({6, 9, 5, 1}));
  EXPECT_EQ(betti_vector(second), big({6, 9, 5, 1}));
  for (std::uint64_t i = 1; i <= 4; ++i) EXPECT_EQ(betti_from_type(first, i), betti_from_type(second, i));
}

TEST(BettiFromType, SingleStarIsKoszul) {
  const TypeSequence star{7};
  for (std::uint64_t i = 1; i <= 9; ++i) EXPECT_EQ(betti_from_type(star, i), binomial(7, i));
}

TEST(BettiFromType, SmallGraphs) {
  EXPECT_EQ(betti_vector(TypeSequence{2, 1}), big({3, 2}));          // K_3
  EXPECT_EQ(betti_vector(TypeSequence{2, 1, 1}), big({4, 4, 1}));    // C_4
  EXPECT_EQ(betti_vector(TypeSequence{4, 2, 1, 1}), big({8, 14, 9, 2}));  // Gamma(Z_12)
  EXPECT_TRUE(betti_vector(TypeSequence{}).empty());
  EXPECT_EQ(betti_from_type(TypeSequence{}, 3), 0);
}

TEST(BettiFromType, RejectsDegreeZero) { EXPECT_THROW(betti_from_type(TypeSequence{1}, 0), Error); }

TEST(BettiRecursive, Fixtures) {
  EXPECT_EQ(betti_recursive(TypeSequence{2, 2, 2}, 2), 9);
  EXPECT_EQ(betti_recursive(TypeSequence{5}, 3), 10);
  EXPECT_EQ(betti_recursive(TypeSequence{2, 1}, 2), 2);
}

TEST(PdFromType, Fixtures) {
  EXPECT_EQ(pd_from_type(TypeSequence{2, 2, 2}), 4u);
  EXPECT_EQ(pd_from_type(TypeSequence{4, 2}), 4u);
  EXPECT_EQ(pd_from_type(TypeSequence{9}), 9u);
  EXPECT_EQ(pd_from_type(TypeSequence{}), 0u);
}

TEST(Summarize, Fixtures) {
  EXPECT_EQ(summarize(TypeSequence{2, 2, 2}), (ResolutionSummary{4, 1, 6}));
  EXPECT_EQ(summarize(TypeSequence{}), (ResolutionSummary{0, 0, 0}));
  EXPECT_EQ(summarize(TypeSequence{4, 4}), (ResolutionSummary{5, 1, 8}));
}

TEST(RenderTable, ExampleLayout) {
  const std::string text = render_table(table_from_type(TypeSequence{2, 2, 2}));
  EXPECT_EQ(text, "   0 1 2 3\n2: 6 9 5 1\n");
}

TEST(RenderTable, EmptyAndTriangle) {
  EXPECT_EQ(render_table(table_from_type(TypeSequence{})), "0: 1\n");
  EXPECT_EQ(render_table(table_from_type(TypeSequence{2, 1})), "   0 1\n2: 3 2\n");
}

TEST(RenderTable, WideColumnsAndTruncation) {
  const auto table = table_from_type(TypeSequence{6, 5, 4});
  // 3*C(6,i) - C(3,i+1)
  EXPECT_EQ(render_table(table), "    0  1  2  3  4 5\n2: 15 44 60 45 18 3\n");
  EXPECT_EQ(render_table(table, 2), "    0  1 ...\n2: 15 44 ...\n");
}

TEST(RenderTable, NonlinearStrands) {
  BettiTable b;
  b.set(0, 0, 1);
  b.set(1, 2, 2);
  b.set(2, 4, 1);
  EXPECT_EQ(render_table(b), "   0 1\n2: 2 -\n3: - 1\n");
}

TEST(TypeSequenceRuns, DescendingRunsMatchExpansion) {
  TypeSequence t;
  t.push_descending(14, 1);
  t.push_descending(9, 2);
  t.push_descending(5, 4);
  EXPECT_EQ(t.expand(), (std::vector<std::uint64_t>{14, 9, 8, 5, 4, 3, 2}));
  EXPECT_EQ(t.to_string(), "(14,9,8,5,4,3,2)");
  const auto flat = TypeSequence::from_values(t.expand());
  EXPECT_EQ(betti_vector(t), betti_vector(flat));
  EXPECT_EQ(t.sum<BigInt>(), 45);
}

TEST(BettiProperties, ClosedFormEqualsRecursion) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = random_type(rng, 12, 12);
    const std::uint64_t top = pd_from_type(t) + 2;
    for (std::uint64_t i = 1; i <= top; ++i) ASSERT_EQ(betti_from_type(t, i), betti_recursive(t, i));
  }
}

TEST(BettiProperties, NonnegativeAndVanishingPastPd) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto t = random_type(rng, 12, 12);
    const auto pd = pd_from_type(t);
    for (std::uint64_t i = 1; i <= pd + 3; ++i) {
      const BigInt b = betti_from_type(t, i);
      ASSERT_GE(b, 0);
      if (i > pd) {
        ASSERT_EQ(b, 0);
      }
    }
  }
}

TEST(BettiProperties, LastBettiPositiveForPositiveTypes) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const auto t = random_type(rng, 12, 12, 1);
    ASSERT_GE(betti_from_type(t, pd_from_type(t)), 1);
  }
}

TEST(BettiProperties, FirstBettiIsSum) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = random_type(rng, 20, 30);
    ASSERT_EQ(betti_from_type(t, 1), t.sum<BigInt>());
  }
}

TEST(BettiProperties, AppendZeroInvariance) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = random_type(rng, 12, 12);
    auto t0 = t;
    t0.push_back(0);
    const auto top = std::max(pd_from_type(t), pd_from_type(t0)) + 1;
    for (std::uint64_t i = 1; i <= top; ++i) ASSERT_EQ(betti_from_type(t, i), betti_from_type(t0, i));
  }
}

TEST(BettiProperties, RecursionMatchesOnDescendingRuns) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::uint64_t> start(3, 15), len(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    TypeSequence t;
    for (int r = 0; r < 3; ++r) {
      const auto s = start(rng);
      t.push_descending(s, std::min(len(rng), s + 1));
    }
    ASSERT_EQ(betti_vector(t), recursive_vector(t));
  }
}

TEST(Binomial, ExactForHugeValues) {
  const BigInt c = binomial(4000, 2000);
  EXPECT_GE(to_decimal(c).size(), 1000u);
  EXPECT_EQ(c, binomial_by_legendre(4000, 2000));
  EXPECT_EQ(binomial(BigInt(1) << 400, BigInt(2)), ((BigInt(1) << 400) * ((BigInt(1) << 400) - 1)) / 2);
  EXPECT_EQ(binomial(5, 7), 0);
}

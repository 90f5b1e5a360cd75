#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace cochordal;
using namespace cochordal::testing;

namespace {

BettiTable table(std::initializer_list<std::tuple<std::uint64_t, std::uint64_t, long long>> xs) {
  BettiTable b;
  for (const auto& [i, j, v] : xs) b.set(i, j, v);
  return b;
}

}  // namespace

TEST(ReducedHomology, SmallComplexes) {
  // Ind(K_2) is two points
  const SimpleGraph k2(2, {{0, 1}});
  EXPECT_EQ(homology_ranks(k2, k2.all_vertices()).at(0), 1u);
  // Ind of two non-adjacent vertices is a segment
  const auto seg = homology_ranks(edgeless(2), edgeless(2).all_vertices());
  for (int d = -1; d <= 1; ++d) EXPECT_EQ(seg.at(d), 0u);
  // Ind(3K_2) is the octahedron boundary
  const SimpleGraph three(6, {{0, 1}, {2, 3}, {4, 5}});
  const auto oct = homology_ranks(three, three.all_vertices());
  EXPECT_EQ(oct.at(2), 1u);
  EXPECT_EQ(oct.at(1), 0u);
  EXPECT_EQ(oct.at(0), 0u);
  // the empty complex {∅}
  EXPECT_EQ(homology_ranks(k2, k2.empty_set()).at(-1), 1u);
}

TEST(ReducedHomology, FaceCounts) {
  EXPECT_EQ(independence_face_counts(cycle(4), cycle(4).all_vertices()), (std::vector<std::uint64_t>{1, 4, 2}));
  EXPECT_EQ(independence_face_counts(edgeless(3), edgeless(3).all_vertices()),
            (std::vector<std::uint64_t>{1, 3, 3, 1}));
}

TEST(ReducedHomology, Errors) {
  try {
    homology_ranks(complete(3), complete(3).all_vertices(), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::non_prime_characteristic);
  }
  const auto big_graph = edgeless(16);
  try {
    homology_ranks(big_graph, big_graph.all_vertices(), 2, 14);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::cap_exceeded);
  }
}

TEST(GradedBettiOracle, Fixtures) {
  EXPECT_EQ(graded_betti_oracle(complete(3)), table({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}));
  EXPECT_EQ(graded_betti_oracle(SimpleGraph(2, {{0, 1}})), table({{0, 0, 1}, {1, 2, 1}}));
  EXPECT_EQ(graded_betti_oracle(cycle(4)), table({{0, 0, 1}, {1, 2, 4}, {2, 3, 4}, {3, 4, 1}}));
  EXPECT_EQ(graded_betti_oracle(edgeless(3)), table({{0, 0, 1}}));
}

TEST(GradedBettiOracle, TwoK2IsNotLinear) {
  const auto b = graded_betti_oracle(two_k2());
  EXPECT_EQ(b, table({{0, 0, 1}, {1, 2, 2}, {2, 4, 1}}));
  EXPECT_FALSE(b.is_linear());
  EXPECT_EQ(b.reg(), 2u);
  EXPECT_EQ(b.pd(), 2u);
}

TEST(GradedBettiOracle, FiveCycle) {
  // Ind(C_5) is a 5-cycle; the top entry sits at beta_{3,5}
  const auto b = graded_betti_oracle(cycle(5));
  EXPECT_EQ(b, table({{0, 0, 1}, {1, 2, 5}, {2, 3, 5}, {3, 5, 1}}));
}

TEST(GradedBettiOracle, RespectsCapAndCharacteristic) {
  OracleConfig cfg;
  cfg.max_vertices = 4;
  EXPECT_THROW(graded_betti_oracle(cycle(5), cfg), Error);
  cfg.max_vertices = 14;
  cfg.characteristic = 9;
  EXPECT_THROW(graded_betti_oracle(cycle(5), cfg), Error);
}

TEST(GradedBettiOracle, WorkerCountDoesNotChangeResult) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    const auto g = random_graph(9, 0.35, rng);
    OracleConfig one, many;
    many.workers = 3;
    ASSERT_EQ(graded_betti_oracle(g, one), graded_betti_oracle(g, many));
    ASSERT_EQ(linear_strand_oracle(g, one), linear_strand_oracle(g, many));
  }
}

TEST(LinearStrandOracle, MatchesFullOracle) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const auto g = random_graph(4 + t % 7, 0.45, rng);
    ASSERT_EQ(linear_strand_oracle(g), graded_betti_oracle(g).linear_strand());
  }
}

TEST(LinearStrandOracle, Fixtures) {
  EXPECT_EQ(linear_strand_oracle(cycle(4)), big({4, 4, 1}));
  EXPECT_EQ(linear_strand_oracle(two_k2()), big({2}));
  EXPECT_TRUE(linear_strand_oracle(edgeless(4)).empty());
  OracleConfig cfg;
  cfg.linear_max_vertices = 3;
  EXPECT_THROW(linear_strand_oracle(cycle(4), cfg), Error);
}

TEST(OracleProperties, CharacteristicIndependenceOnSmallGraphs) {
  std::mt19937_64 rng(23);
  OracleConfig odd;
  odd.characteristic = 32003;
  for (int t = 0; t < 40; ++t) {
    const auto g = random_graph(5 + t % 4, 0.4, rng);
    ASSERT_EQ(graded_betti_oracle(g), graded_betti_oracle(g, odd));
  }
  OracleConfig three;
  three.characteristic = 3;
  const SimpleGraph oct(6, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_EQ(graded_betti_oracle(oct), graded_betti_oracle(oct, three));
}

TEST(OracleProperties, FrobergExhaustiveSmall) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_graph(n, [&](const SimpleGraph& g) { ASSERT_EQ(is_linear_resolution(g), is_cochordal(g)); });
  }
}

TEST(OracleProperties, PipelineMatchesOracleExhaustiveSmall) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_graph(n, [&](const SimpleGraph& g) {
      if (!is_cochordal(g)) return;
      ASSERT_EQ(pipeline_table(g), graded_betti_oracle(g));
    });
  }
}

TEST(OracleProperties, PipelineMatchesOracleRandom) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_cochordal(7 + t % 3, rng);
    ASSERT_EQ(pipeline_table(g), graded_betti_oracle(g));
  }
}

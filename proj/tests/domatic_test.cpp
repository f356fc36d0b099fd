#include <gtest/gtest.h>

#include "ktuple/domatic.hpp"
#include "ktuple/errors.hpp"
#include "ktuple/generators.hpp"
#include "support.hpp"

namespace ktuple {
namespace {

using testing::all_labeled_graphs_up_to;

DomaticPartition partition(int k, Mode mode, std::size_t n, std::initializer_list<std::initializer_list<Vertex>> cls) {
  DomaticPartition p{k, mode, {}};
  for (auto c : cls) p.classes.emplace_back(n, c);
  return p;
}

TEST(DomaticPartitionCheck, Examples) {
  EXPECT_TRUE(is_domatic_partition(complete(4), partition(2, Mode::closed, 4, {{0, 1}, {2, 3}})));
  for (const auto& g : {cycle(5), complete(4), clique_chain(2), gnp(8, 0.7, 5)}) {
    DomaticPartition whole{static_cast<int>(g.min_degree()) + 1, Mode::closed, {g.all_vertices()}};
    EXPECT_TRUE(is_domatic_partition(g, whole));
  }
  // C4 as 0-1-2-3-0.
  EXPECT_TRUE(is_domatic_partition(cycle(4), partition(1, Mode::closed, 4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_domatic_partition(cycle(4), partition(1, Mode::open, 4, {{0, 1}, {2, 3}})));
}

TEST(DomaticPartitionCheck, RejectsInvalid) {
  const auto k4 = complete(4);
  // Does not cover vertex 3.
  EXPECT_FALSE(is_domatic_partition(k4, partition(1, Mode::closed, 4, {{0, 1}, {2}})));
  // Class {2,3} fine, class {0} too small for k = 2.
  EXPECT_FALSE(is_domatic_partition(k4, partition(2, Mode::closed, 4, {{0}, {1, 2, 3}})));
  EXPECT_FALSE(is_domatic_partition(k4, partition(1, Mode::closed, 4, {{0, 1, 2, 3}, {}})));
  EXPECT_FALSE(is_domatic_partition(k4, DomaticPartition{1, Mode::closed, {}}));
  EXPECT_THROW(is_domatic_partition(k4, partition(1, Mode::closed, 4, {{0, 1}, {1, 2, 3}})), GraphError);
  EXPECT_THROW(is_domatic_partition(k4, partition(1, Mode::closed, 5, {{0, 1, 2, 3, 4}})), GraphError);
}

TEST(DXk, CompleteGraphs) {
  EXPECT_EQ(d_xk(complete(7), 3).value, 2u);
  EXPECT_EQ(d_xk(complete(4), 2).value, 2u);
  EXPECT_EQ(d_xk(complete(6), 2).value, 3u);
}

TEST(DXk, ReferenceInstances) {
  EXPECT_EQ(d_xk(cycle(5), 2).value, 1u);
  const auto k4 = complete(4);  // K_{2k}, k = 2
  EXPECT_EQ(d_xk(k4, 2).value + gamma_xk(k4, 2).value, 4u);
  EXPECT_EQ(d_xk(clique_chain(2), 2, Mode::open).value, 1u);
  const auto chain = d_xk(clique_chain(2), 2, Mode::closed);
  EXPECT_EQ(chain.value, 2u);
  EXPECT_TRUE(is_domatic_partition(clique_chain(2), chain.witness));
  EXPECT_EQ(d_xk(cycle(4), 1).value, 2u);
  EXPECT_EQ(d_xk(cycle(4), 1, Mode::open).value, 2u);
}

TEST(DXk, BoundsRecorded) {
  const auto r = d_xk(complete(9), 2);
  EXPECT_EQ(r.value, 4u);
  EXPECT_EQ(r.bounds_used.degree_ceiling, 4u);
  EXPECT_EQ(r.bounds_used.gamma, 2u);
  EXPECT_EQ(r.bounds_used.gamma_ceiling, 4u);
  EXPECT_EQ(r.bounds_used.zelinka_floor, 4u);
}

TEST(DXk, DegreeGate) {
  EXPECT_THROW(d_xk(complete(3), 5), PreconditionError);
  EXPECT_THROW(d_xk(path(4), 2, Mode::open), PreconditionError);
}

TEST(DOracle, Examples) {
  EXPECT_EQ(d_oracle(complete(4), 2).value, 2u);
  EXPECT_THROW(d_oracle(complete(3), 5), PreconditionError);
  EXPECT_EQ(d_oracle(complete_bipartite(2, 2), 2).value, 1u);
  EXPECT_THROW(d_oracle(complete(11), 1), CapExceeded);
}

TEST(DOracle, AgreesWithSolverOnAllSmallGraphs) {
  for (const auto& g : all_labeled_graphs_up_to(5)) {
    for (auto mode : {Mode::closed, Mode::open}) {
      for (int k = 1; k <= 3; ++k) {
        if (!admits_ktuple_set(g, k, mode)) continue;
        const auto solved = d_xk(g, k, mode);
        const auto oracle = d_oracle(g, k, mode);
        ASSERT_EQ(solved.value, oracle.value);
        ASSERT_TRUE(is_domatic_partition(g, solved.witness));
        ASSERT_TRUE(is_domatic_partition(g, oracle.witness));
      }
    }
  }
}

TEST(DOracle, AgreesWithSolverOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 6 + seed % 4;
    const double p = seed % 2 == 0 ? 0.6 : 0.85;
    const auto g = gnp(n, p, mix_seed(5, seed));
    for (auto mode : {Mode::closed, Mode::open}) {
      for (int k = 1; k <= 2; ++k) {
        if (!admits_ktuple_set(g, k, mode)) continue;
        ASSERT_EQ(d_xk(g, k, mode).value, d_oracle(g, k, mode).value) << "seed " << seed;
      }
    }
  }
}

TEST(DXk, ExactPartitionSearch) {
  EXPECT_TRUE(find_domatic_partition(complete(6), 2, Mode::closed, 3).has_value());
  EXPECT_FALSE(find_domatic_partition(complete(6), 2, Mode::closed, 4).has_value());
  EXPECT_FALSE(find_domatic_partition(complete(6), 2, Mode::closed, 0).has_value());
  auto single = find_domatic_partition(cycle(5), 2, Mode::closed, 1);
  ASSERT_TRUE(single.has_value());
  EXPECT_EQ(single->size(), 1u);
}

TEST(Zelinka, Examples) {
  auto k6 = zelinka_partition(complete(6), 2);
  ASSERT_TRUE(k6.has_value());
  ASSERT_EQ(k6->size(), 3u);
  for (const auto& cls : k6->classes) EXPECT_EQ(cls.size(), 2u);

  auto k4 = zelinka_partition(complete(4), 1);
  ASSERT_TRUE(k4.has_value());
  EXPECT_EQ(k4->size(), 4u);

  EXPECT_FALSE(zelinka_partition(cycle(5), 2).has_value());
  EXPECT_THROW(zelinka_partition(cycle(5), 4), PreconditionError);
}

TEST(Zelinka, RemainderGoesToLastClass) {
  // K_7, k = 2: blocks of 2, three classes, the last absorbs vertex 6.
  auto p = zelinka_partition(complete(7), 2);
  ASSERT_TRUE(p.has_value());
  ASSERT_EQ(p->size(), 3u);
  EXPECT_EQ(p->classes[2], VertexSet(7, {4, 5, 6}));
  EXPECT_TRUE(is_domatic_partition(complete(7), *p));
}

}  // namespace
}  // namespace ktuple

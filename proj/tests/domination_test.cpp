#include <array>

#include <gtest/gtest.h>

#include "ktuple/domination.hpp"
#include "ktuple/errors.hpp"
#include "ktuple/generators.hpp"
#include "support.hpp"

namespace ktuple {
namespace {

using testing::all_labeled_graphs_up_to;

Graph copies_of_complete(std::size_t copies, std::size_t order) {
  std::vector<Graph> parts(copies, complete(order));
  return disjoint_union(parts);
}

TEST(Predicates, ClosedExamples) {
  EXPECT_TRUE(is_ktuple_dominating(complete(4), VertexSet(4, {0, 1}), 2));
  // Vertex 4 sits outside {0,1,2} with a single neighbour (0) inside.
  EXPECT_FALSE(is_ktuple_dominating(cycle(5), VertexSet(5, {0, 1, 2}), 2));
  for (const auto& g : {cycle(5), complete(3), clique_chain(2), gnp(9, 0.6, 4)}) {
    EXPECT_TRUE(is_ktuple_dominating(g, g.all_vertices(), static_cast<int>(g.min_degree()) + 1));
  }
}

TEST(Predicates, OpenExamples) {
  EXPECT_TRUE(is_ktuple_total_dominating(complete_bipartite(2, 2), VertexSet::full(4), 2));
  EXPECT_FALSE(is_ktuple_total_dominating(complete(4), VertexSet(4, {0, 1}), 2));
  // H2 ∪ H3 in the chain of four K2 copies.
  EXPECT_TRUE(is_ktuple_total_dominating(clique_chain(2), VertexSet(8, {2, 3, 4, 5}), 2));
}

TEST(Predicates, Errors) {
  EXPECT_THROW(is_ktuple_dominating(complete(4), VertexSet(5, {4}), 1), GraphError);
  EXPECT_THROW(is_ktuple_dominating(complete(4), VertexSet(4), 0), std::invalid_argument);
}

TEST(Predicates, UniformTestMatchesTwoCaseDefinition) {
  // Exhaustive over every subset of every labeled graph with n <= 5, plus
  // every subset of sampled graphs up to n = 8.
  std::vector<Graph> graphs = all_labeled_graphs_up_to(5);
  for (std::uint64_t seed = 0; seed < 40; ++seed) graphs.push_back(gnp(6 + seed % 3, 0.5, seed));
  for (const auto& g : graphs) {
    const std::size_t n = g.order();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      VertexSet s(n);
      for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1U) s.insert(v);
      for (int k = 1; k <= 3; ++k) {
        ASSERT_EQ(is_ktuple_dominating(g, s, k), testing::two_case_ktuple_dominating(g, s, k));
      }
    }
  }
}

TEST(GammaXk, KnownValues) {
  EXPECT_EQ(gamma_xk(complete_bipartite(2, 2), 3).value, 4u);
  EXPECT_EQ(gamma_xk(cycle(5), 2).value, 4u);
  EXPECT_EQ(gamma_xk(copies_of_complete(2, 3), 3).value, 6u);
  EXPECT_EQ(gamma_xk(complete(4), 2).value, 2u);
  EXPECT_EQ(gamma_xk(clique_chain(2), 2, Mode::open).value, 4u);
  EXPECT_EQ(gamma_xk(clique_chain(2), 2, Mode::open).witness, VertexSet(8, {2, 3, 4, 5}));
}

TEST(GammaXk, WitnessMatchesValue) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = gnp(10, 0.6, seed);
    for (auto mode : {Mode::closed, Mode::open}) {
      for (int k = 1; k <= 3; ++k) {
        if (!admits_ktuple_set(g, k, mode)) continue;
        const auto r = gamma_xk(g, k, mode);
        EXPECT_EQ(r.witness.size(), r.value);
        EXPECT_TRUE(is_dominating(g, r.witness, k, mode));
        EXPECT_EQ(r.k, k);
        EXPECT_EQ(r.mode, mode);
        EXPECT_GT(r.nodes_explored, 0u);
      }
    }
  }
}

TEST(GammaXk, DegreeGate) {
  try {
    gamma_xk(cycle(5), 4);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.min_degree(), 2u);
    EXPECT_EQ(e.k(), 4);
    EXPECT_EQ(e.required_degree(), 3u);
  }
  EXPECT_THROW(gamma_xk(cycle(5), 3, Mode::open), PreconditionError);
  EXPECT_NO_THROW(gamma_xk(cycle(5), 2, Mode::open));
}

TEST(GammaXk, GreedyIsAnUpperBound) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = gnp(9, 0.5, seed);
    if (!admits_ktuple_set(g, 2, Mode::closed)) continue;
    const auto greedy = greedy_upper_bound(g, 2, Mode::closed);
    EXPECT_TRUE(is_ktuple_dominating(g, greedy, 2));
    EXPECT_GE(greedy.size(), gamma_xk(g, 2).value);
  }
}

TEST(GammaOracle, Examples) {
  EXPECT_EQ(gamma_oracle(complete(4), 2).value, 2u);
  EXPECT_EQ(gamma_oracle(complete(1), 1).value, 1u);
  EXPECT_EQ(gamma_oracle(cycle(4), 2, Mode::open).value, 4u);
  EXPECT_THROW(gamma_oracle(complete(21), 1), CapExceeded);
  EXPECT_THROW(gamma_oracle(complete(8), 1, Mode::closed, 6), CapExceeded);
}

TEST(GammaOracle, AgreesWithSolverOnAllSmallGraphs) {
  std::size_t compared = 0;
  for (const auto& g : all_labeled_graphs_up_to(5)) {
    for (auto mode : {Mode::closed, Mode::open}) {
      for (int k = 1; k <= 3; ++k) {
        if (!admits_ktuple_set(g, k, mode)) continue;
        ASSERT_EQ(gamma_xk(g, k, mode).value, gamma_oracle(g, k, mode).value);
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 1000u);
}

TEST(GammaOracle, AgreesWithSolverOnRandomEightVertexGraphs) {
  std::size_t compared = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = gnp(8, 0.5, mix_seed(17, seed));
    for (auto mode : {Mode::closed, Mode::open}) {
      for (int k = 1; k <= 3; ++k) {
        if (!admits_ktuple_set(g, k, mode)) continue;
        ASSERT_EQ(gamma_xk(g, k, mode).value, gamma_oracle(g, k, mode).value) << "seed " << seed;
        ++compared;
      }
    }
  }
  EXPECT_GE(compared, 200u);
}

TEST(GammaXk, MonotoneInK) {
  for (const auto& g : all_labeled_graphs_up_to(5)) {
    for (int k = 1; admits_ktuple_set(g, k + 1, Mode::closed); ++k) {
      EXPECT_LE(gamma_xk(g, k).value, gamma_xk(g, k + 1).value);
    }
  }
}

TEST(GammaXk, AtLeastK) {
  // |N[v] ∩ S| >= k forces |S| >= k; in particular γ×k = k-1 never occurs.
  for (const auto& g : all_labeled_graphs_up_to(5)) {
    for (int k = 1; admits_ktuple_set(g, k, Mode::closed); ++k) {
      EXPECT_GE(gamma_xk(g, k).value, static_cast<std::size_t>(k));
    }
  }
}

TEST(GammaXk, BipartiteLowerBound) {
  for (int k = 2; k <= 5; ++k) {
    const auto side = static_cast<std::size_t>(k - 1);
    EXPECT_EQ(gamma_xk(complete_bipartite(side, side), k).value, 2 * side);
  }
  for (std::size_t a = 1; a <= 5; ++a) {
    for (std::size_t b = a; b <= 5; ++b) {
      const auto g = complete_bipartite(a, b);
      for (int k = 2; admits_ktuple_set(g, k, Mode::closed); ++k) {
        const auto value = gamma_xk(g, k).value;
        EXPECT_GE(value, static_cast<std::size_t>(2 * k - 2));
        const bool target = a == b && a == static_cast<std::size_t>(k - 1);
        EXPECT_EQ(value == static_cast<std::size_t>(2 * k - 2), target) << "K_{" << a << "," << b << "} k=" << k;
      }
    }
  }
  for (std::size_t n : {4u, 6u, 8u}) {
    const auto g = cycle(n);
    EXPECT_GE(gamma_xk(g, 2).value, 2u);
    EXPECT_GT(gamma_xk(g, 2).value, 2u);
  }
}

TEST(Decomposition, Examples) {
  auto witness = kjoin_decomposition_exists(complete(4), 2, 2);
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(witness->size(), 2u);
  EXPECT_TRUE(is_ktuple_dominating(complete(4), *witness, 2));

  EXPECT_FALSE(kjoin_decomposition_exists(cycle(5), 2, 3).has_value());
  EXPECT_TRUE(kjoin_decomposition_exists(cycle(5), 2, 4).has_value());
  EXPECT_THROW(kjoin_decomposition_exists(cycle(5), 2, 6), std::invalid_argument);
  // K_{k-1} fails the degree gate for k = 3.
  EXPECT_THROW(kjoin_decomposition_exists(complete(2), 3, 2), PreconditionError);
}

TEST(Decomposition, KJoinConstructionsDecomposeOntoTheirCore) {
  // F o_k K_m with m >= k: the K_m side is a k-join core of size m.
  for (int k = 1; k <= 3; ++k) {
    for (std::size_t m = static_cast<std::size_t>(k); m <= 4; ++m) {
      const auto g = k_join(cycle(4), complete(m), k, JoinRule::exactly_k(static_cast<std::uint64_t>(m)));
      if (!admits_ktuple_set(g, k, Mode::closed)) continue;
      EXPECT_TRUE(kjoin_decomposition_exists(g, k, m).has_value());
      EXPECT_LE(gamma_xk(g, k).value, m);
    }
  }
}

TEST(Decomposition, MinimumCoreEqualsGamma) {
  for (const auto& g : all_labeled_graphs_up_to(5)) {
    for (int k = 1; k <= 3; ++k) {
      if (!admits_ktuple_set(g, k, Mode::closed)) continue;
      ASSERT_EQ(min_kjoin_decomposition(g, k), gamma_xk(g, k).value);
    }
  }
}

TEST(Modes, ParseAndPrint) {
  EXPECT_EQ(parse_mode("closed"), Mode::closed);
  EXPECT_EQ(parse_mode(to_string(Mode::open)), Mode::open);
  EXPECT_THROW(parse_mode("total"), std::invalid_argument);
}

}  // namespace
}  // namespace ktuple

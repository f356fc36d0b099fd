#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "ktuple/graph.hpp"
#include "ktuple/vertex_set.hpp"

namespace ktuple {

/// closed: k-tuple domination, every v needs |N[v] ∩ S| >= k.
/// open:   k-tuple total domination, every v needs |N(v) ∩ S| >= k.
enum class Mode { closed, open };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Smallest minimum degree for which a dominating set of this kind exists.
constexpr std::size_t required_min_degree(int k, Mode mode) {
  return mode == Mode::closed ? static_cast<std::size_t>(k - 1) : static_cast<std::size_t>(k);
}

/// True when (g, k, mode) passes the degree gate.
bool admits_ktuple_set(const Graph& g, int k, Mode mode);

/// Throws PreconditionError unless admits_ktuple_set(g, k, mode).
void require_ktuple_set(const Graph& g, int k, Mode mode);

bool is_ktuple_dominating(const Graph& g, const VertexSet& s, int k);
bool is_ktuple_total_dominating(const Graph& g, const VertexSet& s, int k);
bool is_dominating(const Graph& g, const VertexSet& s, int k, Mode mode);

struct GammaResult {
  std::size_t value = 0;
  VertexSet witness;
  Mode mode = Mode::closed;
  int k = 1;
  std::uint64_t nodes_explored = 0;
};

/// Exact γ×k (closed) or γ×k,t (open) by branch and bound.
///
/// Vertices are decided in ascending-degree order (ties by id), include
/// branch first. Each node tracks per-vertex residual demand
/// k - |covered| and the number of still-undecided candidates able to
/// cover it; a node dies when some vertex cannot be covered any more, or
/// when |S| plus a lower bound on the remaining picks reaches the
/// incumbent. The incumbent starts from greedy_upper_bound().
///
/// Throws PreconditionError when the degree gate fails.
GammaResult gamma_xk(const Graph& g, int k, Mode mode = Mode::closed);

/// Greedy k-tuple (total) dominating set: repeatedly adds the vertex that
/// serves the most still-unsatisfied vertices, ties to the lowest id.
/// Only an upper bound.
VertexSet greedy_upper_bound(const Graph& g, int k, Mode mode);

inline constexpr std::size_t kGammaOracleCap = 20;

/// Brute-force γ×k / γ×k,t by scanning subsets in increasing cardinality.
/// Independent of gamma_xk: adjacency is re-read into plain bit masks and
/// sets are tested with the literal in-set / out-of-set definition.
/// Throws CapExceeded above `cap` vertices (hard limit kGammaOracleCap).
GammaResult gamma_oracle(const Graph& g, int k, Mode mode = Mode::closed, std::size_t cap = kGammaOracleCap);

/// Searches for T with |T| = t such that G[T] has minimum degree >= k-1
/// and every vertex outside T has at least k neighbours in T; i.e. G is a
/// k-join of G - T to G[T]. Such a T exists exactly when G has a k-tuple
/// dominating set of cardinality t.
///
/// Requires δ(g) >= k-1 (PreconditionError) and t <= n (std::invalid_argument).
std::optional<VertexSet> kjoin_decomposition_exists(const Graph& g, int k, std::size_t t);

/// min{t : kjoin_decomposition_exists(g, k, t)}, scanning t upward.
std::size_t min_kjoin_decomposition(const Graph& g, int k);

}  // namespace ktuple

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ktuple/domination.hpp"
#include "ktuple/generators.hpp"
#include "ktuple/graph.hpp"
#include "ktuple/rng.hpp"

namespace ktuple::testing {

/// Every labeled simple graph on n vertices (2^(n choose 2) of them), in
/// edge-mask order.
inline std::vector<Graph> all_labeled_graphs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(slots[i]);
    out.emplace_back(n, edges);
  }
  return out;
}

/// All labeled graphs with 1..max_n vertices.
inline std::vector<Graph> all_labeled_graphs_up_to(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto batch = all_labeled_graphs(n);
    out.insert(out.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  return out;
}

/// The in-set / out-of-set definition, written out literally and without
/// the closed-neighborhood shortcut the library uses.
inline bool two_case_ktuple_dominating(const Graph& g, const VertexSet& s, int k) {
  for (Vertex v = 0; v < g.order(); ++v) {
    std::size_t inside = 0;
    for (Vertex u = 0; u < g.order(); ++u)
      if (u != v && g.adjacent(u, v) && s.contains(u)) ++inside;
    const std::size_t need = static_cast<std::size_t>(s.contains(v) ? k - 1 : k);
    if (inside < need) return false;
  }
  return true;
}

/// Random subset with each vertex kept with probability 1/2.
inline VertexSet random_subset(std::size_t n, Rng& rng) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (rng.bernoulli(0.5)) s.insert(v);
  return s;
}

}  // namespace ktuple::testing

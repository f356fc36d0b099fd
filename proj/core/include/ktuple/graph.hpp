#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ktuple/vertex_set.hpp"

namespace ktuple {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable finite simple graph on vertices 0..n-1.
///
/// Open and closed neighborhoods are both materialized as bit sets so that
/// |N(v) ∩ S| and |N[v] ∩ S| are single popcount passes. Instances are never
/// mutated after construction and can be shared freely between threads.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse silently; self-loops and out-of-range endpoints
  /// throw GraphError, as does n == 0.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Edgeless graph on n vertices.
  static Graph empty(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

  std::size_t order() const noexcept { return open_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const VertexSet& open_neighborhood(Vertex v) const { return open_.at(v); }
  const VertexSet& closed_neighborhood(Vertex v) const { return closed_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return open_.at(u).contains(v); }

  std::size_t degree(Vertex v) const { return degree_.at(v); }
  std::size_t min_degree() const noexcept { return min_degree_; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  bool is_regular() const noexcept { return min_degree_ == max_degree_; }

  /// Canonical edge list: u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Two-colorability test by BFS.
  bool is_bipartite() const;

  VertexSet all_vertices() const { return VertexSet::full(order()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.open_ == b.open_; }

 private:
  std::vector<VertexSet> open_;
  std::vector<VertexSet> closed_;
  std::vector<std::size_t> degree_;
  std::size_t edge_count_ = 0;
  std::size_t min_degree_ = 0;
  std::size_t max_degree_ = 0;
};

}  // namespace ktuple

#include "ktuple/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "ktuple/errors.hpp"

namespace ktuple {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw GraphError("graph must have at least one vertex");
  open_.assign(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") references a vertex >= n = " +
                       std::to_string(n));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    open_[u].insert(v);
    open_[v].insert(u);
  }

  closed_ = open_;
  degree_.resize(n);
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    closed_[v].insert(v);
    degree_[v] = open_[v].size();
    degree_sum += degree_[v];
  }
  edge_count_ = degree_sum / 2;
  auto [lo, hi] = std::minmax_element(degree_.begin(), degree_.end());
  min_degree_ = *lo;
  max_degree_ = *hi;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : open_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_bipartite() const {
  const std::size_t n = order();
  std::vector<int> side(n, -1);
  for (Vertex start = 0; start < n; ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::queue<Vertex> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : open_[u]) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          frontier.push(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ktuple

#include "ktuple/generators.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "ktuple/errors.hpp"
#include "ktuple/graph_io.hpp"
#include "ktuple/rng.hpp"

namespace ktuple {

namespace {

void require_positive(std::size_t value, const char* what) {
  if (value == 0) throw GraphError(std::string(what) + " must be positive");
}

template <typename Rand>
void shuffle(std::vector<Vertex>& items, Rand& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.below(i)]);
  }
}

}  // namespace

Graph complete(std::size_t n) {
  require_positive(n, "complete graph order");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  require_positive(a, "complete bipartite side");
  require_positive(b, "complete bipartite side");
  std::vector<Edge> edges;
  edges.reserve(a * b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  return Graph(a + b, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph path(std::size_t n) {
  require_positive(n, "path order");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw GraphError("disjoint union of zero graphs");
  std::size_t n = 0;
  std::vector<Edge> edges;
  for (const Graph& part : parts) {
    const auto offset = static_cast<Vertex>(n);
    for (auto [u, v] : part.edges()) edges.emplace_back(u + offset, v + offset);
    n += part.order();
  }
  return Graph(n, edges);
}

Graph k_join(const Graph& g, const Graph& h, int k, JoinRule rule) {
  if (k < 1) throw GraphError("k-join parameter must be positive");
  if (h.order() < static_cast<std::size_t>(k)) {
    throw GraphError("k-join needs |V(H)| >= k (|V(H)| = " + std::to_string(h.order()) + ", k = " +
                     std::to_string(k) + ")");
  }
  std::array<Graph, 2> parts{g, h};
  const Graph base = disjoint_union(parts);
  std::vector<Edge> edges = base.edges();
  const auto offset = static_cast<Vertex>(g.order());

  std::vector<Vertex> targets(h.order());
  for (Vertex i = 0; i < h.order(); ++i) targets[i] = offset + i;

  Rng rng(rule.seed);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (rule.kind == JoinRule::Kind::all) {
      for (Vertex t : targets) edges.emplace_back(u, t);
      continue;
    }
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    std::vector<Vertex> pool = targets;
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
      std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
      edges.emplace_back(u, pool[i]);
    }
  }
  return Graph(base.order(), edges);
}

Graph clique_chain(std::size_t k) {
  require_positive(k, "clique chain parameter");
  const std::size_t n = 4 * k;
  std::vector<Edge> edges;
  for (std::size_t block = 0; block < 4; ++block) {
    const auto base = static_cast<Vertex>(block * k);
    for (Vertex i = 0; i < k; ++i) {
      for (Vertex j = i + 1; j < k; ++j) edges.emplace_back(base + i, base + j);
      if (block < 3) {
        for (Vertex j = 0; j < k; ++j) edges.emplace_back(base + i, static_cast<Vertex>(base + k + j));
      }
    }
  }
  return Graph(n, edges);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  require_positive(n, "G(n,p) order");
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("G(n,p) needs 0 <= p <= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_regular(std::size_t n, std::size_t r, std::uint64_t seed) {
  require_positive(n, "random regular order");
  if (r >= n) throw GraphError("random regular graph needs r < n");
  if ((n * r) % 2 != 0) throw GraphError("random regular graph needs n*r even");
  // The pairing model almost never succeeds for large r; sample the sparser
  // complement instead. n(n-1-r) has the same parity as nr.
  if (2 * r > n - 1) return complement(random_regular(n, n - 1 - r, seed));

  Rng rng(seed);
  std::vector<Vertex> stubs;
  stubs.reserve(n * r);
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t i = 0; i < r; ++i) stubs.push_back(v);

  for (int attempt = 0; attempt < kRegularRetryBudget; ++attempt) {
    shuffle(stubs, rng);
    std::set<Edge> seen;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      Vertex u = std::min(stubs[i], stubs[i + 1]);
      Vertex v = std::max(stubs[i], stubs[i + 1]);
      if (u == v || !seen.emplace(u, v).second) {
        simple = false;
        break;
      }
    }
    if (simple) {
      std::vector<Edge> edges(seen.begin(), seen.end());
      return Graph(n, edges);
    }
  }
  throw GeneratorError("pairing model produced no simple " + std::to_string(r) + "-regular graph on " +
                       std::to_string(n) + " vertices within " + std::to_string(kRegularRetryBudget) + " retries");
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph build_graph(const GraphSpec& spec) {
  using F = GraphSpec::Family;
  auto base = [&]() -> Graph {
    switch (spec.family) {
      case F::complete:
        return complete(spec.a);
      case F::complete_bipartite:
        return complete_bipartite(spec.a, spec.b);
      case F::cycle:
        return cycle(spec.a);
      case F::path:
        return path(spec.a);
      case F::disjoint_union: {
        require_positive(spec.a, "number of copies");
        std::vector<Graph> parts(spec.a, complete(spec.b));
        return disjoint_union(parts);
      }
      case F::k_join:
        return k_join(complete(spec.a), complete(spec.b), static_cast<int>(spec.k), spec.rule);
      case F::clique_chain:
        return clique_chain(spec.k);
      case F::gnp:
        return gnp(spec.a, spec.p, spec.seed);
      case F::random_regular:
        return random_regular(spec.a, spec.b, spec.seed);
      case F::from_file:
        return read_graph_file(spec.path).graph;
    }
    throw GraphError("unknown graph family");
  }();
  return spec.take_complement ? complement(base) : base;
}

namespace {

constexpr std::array<std::pair<GraphSpec::Family, std::string_view>, 10> kFamilyNames{{
    {GraphSpec::Family::complete, "complete"},
    {GraphSpec::Family::complete_bipartite, "complete-bipartite"},
    {GraphSpec::Family::cycle, "cycle"},
    {GraphSpec::Family::path, "path"},
    {GraphSpec::Family::disjoint_union, "disjoint-union"},
    {GraphSpec::Family::k_join, "k-join"},
    {GraphSpec::Family::clique_chain, "clique-chain"},
    {GraphSpec::Family::gnp, "gnp"},
    {GraphSpec::Family::random_regular, "random-regular"},
    {GraphSpec::Family::from_file, "from-file"},
}};

}  // namespace

std::string_view family_name(GraphSpec::Family family) {
  for (auto [f, name] : kFamilyNames)
    if (f == family) return name;
  return "unknown";
}

GraphSpec::Family parse_family(std::string_view name) {
  for (auto [f, fname] : kFamilyNames)
    if (fname == name) return f;
  throw GraphError("unknown graph family '" + std::string(name) + "'");
}

std::string describe(const GraphSpec& spec) {
  using F = GraphSpec::Family;
  std::ostringstream out;
  switch (spec.family) {
    case F::complete:
      out << "K_" << spec.a;
      break;
    case F::complete_bipartite:
      out << "K_{" << spec.a << "," << spec.b << "}";
      break;
    case F::cycle:
      out << "C_" << spec.a;
      break;
    case F::path:
      out << "P_" << spec.a;
      break;
    case F::disjoint_union:
      out << spec.a << "K_" << spec.b;
      break;
    case F::k_join:
      out << "K_" << spec.a << " o_" << spec.k << " K_" << spec.b
          << (spec.rule.kind == JoinRule::Kind::all ? "" : " (exactly-k, seed=" + std::to_string(spec.rule.seed) + ")");
      break;
    case F::clique_chain:
      out << "clique-chain(" << spec.k << ")";
      break;
    case F::gnp:
      out << "G(" << spec.a << "," << spec.p << ";seed=" << spec.seed << ")";
      break;
    case F::random_regular:
      out << "RR(" << spec.a << "," << spec.b << ";seed=" << spec.seed << ")";
      break;
    case F::from_file:
      out << spec.path;
      break;
  }
  return spec.take_complement ? "complement(" + out.str() + ")" : out.str();
}

}  // namespace ktuple

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "ktuple/graph.hpp"

namespace ktuple {

// Graph families used as instances and sharpness constructions. All throw
// GraphError on parameters outside the family's domain.

Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle(std::size_t n);
Graph path(std::size_t n);

/// Vertex-relabelled disjoint union; part i occupies the block of ids after
/// parts 0..i-1.
Graph disjoint_union(std::span<const Graph> parts);

/// How each vertex of the left operand of a k-join picks its partners.
struct JoinRule {
  enum class Kind { all, exactly_k };
  Kind kind = Kind::all;
  std::uint64_t seed = 0;

  static JoinRule all() { return {Kind::all, 0}; }
  static JoinRule exactly_k(std::uint64_t seed) { return {Kind::exactly_k, seed}; }
};

/// k-join of g to h: disjoint union (g first, then h) plus, for every vertex
/// of g, edges to at least k vertices of h. Requires |V(h)| >= k >= 1.
Graph k_join(const Graph& g, const Graph& h, int k, JoinRule rule = JoinRule::all());

/// Four copies H1..H4 of K_k where every vertex of H_i is joined to every
/// vertex of H_{i+1}. Vertex ids: H_i occupies [(i-1)k, ik).
Graph clique_chain(std::size_t k);

/// Erdos-Renyi G(n, p); bit-reproducible for a fixed seed.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// Uniform-ish r-regular graph by the pairing model, rejecting loops and
/// multi-edges. For r > (n-1)/2 the complement of an (n-1-r)-regular
/// sample is returned. Throws GeneratorError after kRegularRetryBudget
/// failed pairings.
inline constexpr int kRegularRetryBudget = 1000;
Graph random_regular(std::size_t n, std::size_t r, std::uint64_t seed);

Graph complement(const Graph& g);

/// Parameterized family descriptor; used by the CLI and ensemble runner.
struct GraphSpec {
  enum class Family {
    complete,             // K_a
    complete_bipartite,   // K_{a,b}
    cycle,                // C_a
    path,                 // P_a
    disjoint_union,       // a copies of K_b
    k_join,               // K_a joined to K_b with parameter k
    clique_chain,         // chain of four K_k
    gnp,                  // G(a, p)
    random_regular,       // a vertices, degree b
    from_file,            // edge-list file at `path`
  };

  Family family = Family::complete;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t k = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  JoinRule rule = JoinRule::all();
  std::string path;
  bool take_complement = false;
};

Graph build_graph(const GraphSpec& spec);

std::string_view family_name(GraphSpec::Family family);
/// Inverse of family_name; throws GraphError for unknown names.
GraphSpec::Family parse_family(std::string_view name);

/// Short human-readable label such as "K_{3,3}" or "G(8,0.5;seed=1)".
std::string describe(const GraphSpec& spec);

}  // namespace ktuple

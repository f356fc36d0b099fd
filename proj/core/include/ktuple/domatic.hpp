#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ktuple/domination.hpp"
#include "ktuple/graph.hpp"
#include "ktuple/vertex_set.hpp"

namespace ktuple {

/// Partition of V(G) whose classes are each claimed to be k-tuple (total)
/// dominating sets; the certificate for d×k / d×k,t.
struct DomaticPartition {
  int k = 1;
  Mode mode = Mode::closed;
  std::vector<VertexSet> classes;

  std::size_t size() const noexcept { return classes.size(); }
  /// Cardinality of the smallest class (0 for an empty partition).
  std::size_t min_class_size() const;
};

/// Checks that p partitions V(g) into nonempty classes, each k-tuple
/// dominating (closed) or k-tuple total dominating (open).
///
/// Structural misuse throws GraphError: a class built over a different
/// vertex universe (foreign vertices) or two classes sharing a vertex.
bool is_domatic_partition(const Graph& g, const DomaticPartition& p);

/// Bounds that framed a domatic search.
struct DomaticBounds {
  std::size_t degree_ceiling = 0;   // ⌊(δ+1)/k⌋ closed, ⌊δ/k⌋ open
  std::size_t gamma_ceiling = 0;    // ⌊n/γ⌋
  std::size_t zelinka_floor = 0;    // ⌊n/(k(n-δ))⌋, closed mode only
  std::size_t gamma = 0;            // γ×k or γ×k,t used for gamma_ceiling
};

struct DomaticResult {
  std::size_t value = 0;
  DomaticPartition witness;
  DomaticBounds bounds_used;
  std::uint64_t nodes_explored = 0;
};

/// Exact d×k (closed) or d×k,t (open).
///
/// Tries ℓ = min(degree ceiling, gamma ceiling) down to 2 with a
/// backtracking ℓ-coloring and returns the first feasible ℓ; falls back to
/// the single class V(G). In closed mode the search stops early at the
/// constructive floor, whose partition is then the witness.
///
/// Throws PreconditionError when the degree gate fails.
DomaticResult d_xk(const Graph& g, int k, Mode mode = Mode::closed);

/// Decides whether V(g) splits into exactly `classes` k-tuple (total)
/// dominating sets; returns the partition if so.
std::optional<DomaticPartition> find_domatic_partition(const Graph& g, int k, Mode mode, std::size_t classes,
                                                       std::uint64_t* nodes = nullptr);

inline constexpr std::size_t kDomaticOracleCap = 10;

/// Exhaustive set-partition scan (restricted growth strings) over n <= 10.
/// Independent of d_xk: class validity comes from a precomputed table of
/// subsets tested with the literal in-set / out-of-set definition.
DomaticResult d_oracle(const Graph& g, int k, Mode mode = Mode::closed);

/// Constructive lower-bound partition: with b = k(n-δ) and n >= b, returns
/// ⌊n/b⌋ classes in id order, all of size b except the last, which absorbs
/// the remainder. Every set of at least b vertices is a k-tuple dominating
/// set, so each class qualifies. Returns nullopt when b > n (the bound is
/// vacuous). Throws PreconditionError when δ < k-1.
std::optional<DomaticPartition> zelinka_partition(const Graph& g, int k);

/// ⌊n/(k(n-δ))⌋
std::size_t zelinka_floor(const Graph& g, int k);

}  // namespace ktuple

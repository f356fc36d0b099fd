#pragma once

#include <cstddef>
#include <optional>

#include "ktuple/domatic.hpp"
#include "ktuple/domination.hpp"
#include "ktuple/graph.hpp"

namespace ktuple {

struct InstanceInfo {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  int k = 1;
  bool regular = false;
  bool bipartite = false;
};

InstanceInfo describe_instance(const Graph& g, int k);

/// γ×k, γ×k,t, d×k, d×k,t for one (graph, k). Each value is absent when its
/// degree gate fails (closed needs δ >= k-1, open needs δ >= k).
struct InvariantReport {
  InstanceInfo instance;
  std::optional<GammaResult> gamma;
  std::optional<GammaResult> gamma_total;
  std::optional<DomaticResult> domatic;
  std::optional<DomaticResult> domatic_total;

  /// Re-runs the predicates on every attached certificate.
  bool certificates_valid(const Graph& g) const;
};

InvariantReport compute_invariants(const Graph& g, int k);

}  // namespace ktuple

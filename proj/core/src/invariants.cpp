#include "ktuple/invariants.hpp"

namespace ktuple {

InstanceInfo describe_instance(const Graph& g, int k) {
  return InstanceInfo{g.order(), g.edge_count(), g.min_degree(), g.max_degree(), k, g.is_regular(), g.is_bipartite()};
}

InvariantReport compute_invariants(const Graph& g, int k) {
  InvariantReport report;
  report.instance = describe_instance(g, k);
  if (admits_ktuple_set(g, k, Mode::closed)) {
    report.gamma = gamma_xk(g, k, Mode::closed);
    report.domatic = d_xk(g, k, Mode::closed);
  }
  if (admits_ktuple_set(g, k, Mode::open)) {
    report.gamma_total = gamma_xk(g, k, Mode::open);
    report.domatic_total = d_xk(g, k, Mode::open);
  }
  return report;
}

bool InvariantReport::certificates_valid(const Graph& g) const {
  const int k = instance.k;
  auto gamma_ok = [&](const std::optional<GammaResult>& r) {
    return !r || (r->witness.size() == r->value && is_dominating(g, r->witness, k, r->mode));
  };
  auto domatic_ok = [&](const std::optional<DomaticResult>& r) {
    return !r || (r->witness.size() == r->value && is_domatic_partition(g, r->witness));
  };
  return gamma_ok(gamma) && gamma_ok(gamma_total) && domatic_ok(domatic) && domatic_ok(domatic_total);
}

}  // namespace ktuple

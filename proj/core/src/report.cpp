#include "ktuple/report.hpp"

#include <string>

#include "ktuple/errors.hpp"

namespace ktuple {

using nlohmann::json;

void to_json(json& j, const VertexSet& s) { j = s.to_vector(); }

void to_json(json& j, const GammaResult& r) {
  j = json{{"value", r.value},
           {"witness", r.witness},
           {"mode", std::string(to_string(r.mode))},
           {"k", r.k},
           {"nodes_explored", r.nodes_explored}};
}

void to_json(json& j, const DomaticPartition& p) {
  j = json{{"k", p.k}, {"mode", std::string(to_string(p.mode))}, {"classes", p.classes}};
}

void to_json(json& j, const DomaticResult& r) {
  j = json{{"value", r.value},
           {"witness", r.witness},
           {"bounds_used",
            {{"degree_ceiling", r.bounds_used.degree_ceiling},
             {"gamma_ceiling", r.bounds_used.gamma_ceiling},
             {"zelinka_floor", r.bounds_used.zelinka_floor},
             {"gamma", r.bounds_used.gamma}}},
           {"nodes_explored", r.nodes_explored}};
}

void to_json(json& j, const InstanceInfo& info) {
  j = json{{"n", info.n},
           {"edges", info.edges},
           {"min_degree", info.min_degree},
           {"max_degree", info.max_degree},
           {"k", info.k},
           {"regular", info.regular},
           {"bipartite", info.bipartite}};
}

namespace {

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

}  // namespace

void to_json(json& j, const InvariantReport& r) {
  j = json{{"instance", r.instance},
           {"gamma_xk", optional_json(r.gamma)},
           {"gamma_xkt", optional_json(r.gamma_total)},
           {"d_xk", optional_json(r.domatic)},
           {"d_xkt", optional_json(r.domatic_total)}};
}

void to_json(json& j, const CheckRecord& c) {
  j = json{{"id", c.id},
           {"statement", c.statement},
           {"lhs", c.lhs},
           {"rhs", c.rhs},
           {"status", std::string(to_string(c.status))},
           {"notes", c.notes}};
}

void to_json(json& j, const TheoremReport& r) {
  json counts;
  for (auto status : {CheckStatus::holds, CheckStatus::sharp, CheckStatus::violated, CheckStatus::not_applicable})
    counts[std::string(to_string(status))] = r.count(status);
  j = json{{"invariants", r.invariants},
           {"complement_min_degree", r.complement_min_degree},
           {"complement_d_xk", optional_json(r.complement_domatic)},
           {"r", r.r ? json(*r.r) : json(nullptr)},
           {"checks", r.checks},
           {"status_counts", counts}};
}

VertexSet vertex_set_from_json(const json& j, std::size_t n) {
  VertexSet s(n);
  for (const auto& v : j) {
    const auto id = v.get<long long>();
    if (id < 0 || static_cast<std::size_t>(id) >= n) {
      throw GraphError("certificate vertex " + std::to_string(id) + " outside 0.." + std::to_string(n - 1));
    }
    s.insert(static_cast<Vertex>(id));
  }
  return s;
}

DomaticPartition partition_from_json(const json& j, std::size_t n) {
  DomaticPartition p;
  p.k = j.at("k").get<int>();
  p.mode = parse_mode(j.at("mode").get<std::string>());
  for (const auto& cls : j.at("classes")) p.classes.push_back(vertex_set_from_json(cls, n));
  return p;
}

}  // namespace ktuple

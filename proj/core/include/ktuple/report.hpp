#pragma once

#include <cstddef>

#include <nlohmann/json.hpp>

#include "ktuple/domatic.hpp"
#include "ktuple/domination.hpp"
#include "ktuple/invariants.hpp"
#include "ktuple/theorems.hpp"

namespace ktuple {

// JSON records for reports and certificates. Vertex sets serialize as sorted
// id lists; absent invariants serialize as null.

void to_json(nlohmann::json& j, const VertexSet& s);
void to_json(nlohmann::json& j, const GammaResult& r);
void to_json(nlohmann::json& j, const DomaticPartition& p);
void to_json(nlohmann::json& j, const DomaticResult& r);
void to_json(nlohmann::json& j, const InstanceInfo& info);
void to_json(nlohmann::json& j, const InvariantReport& r);
void to_json(nlohmann::json& j, const CheckRecord& c);
void to_json(nlohmann::json& j, const TheoremReport& r);

/// Reads a vertex list back into a set over `n` vertices; throws GraphError
/// for ids >= n.
VertexSet vertex_set_from_json(const nlohmann::json& j, std::size_t n);

/// Inverse of to_json(DomaticPartition) for re-checking certificates.
DomaticPartition partition_from_json(const nlohmann::json& j, std::size_t n);

}  // namespace ktuple

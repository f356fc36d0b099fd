#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ktuple/cli/run.hpp"
#include "ktuple/invariants.hpp"
#include "ktuple/theorems.hpp"

namespace ktuple::cli {

struct OracleComparison {
  std::vector<std::string> checked;
  std::vector<std::string> skipped;  // instance above the oracle cap
  std::vector<std::string> mismatches;
};

/// Solver values against brute force plus a certificate re-check.
OracleComparison compare_with_oracles(const Graph& g, const InvariantReport& report, std::size_t gamma_cap);

struct EnsembleRow {
  std::size_t instance = 0;
  std::string model;
  std::size_t n_param = 0;
  std::string p = "NA";  // gnp only
  std::string r = "NA";  // random-regular only
  int k = 1;
  std::uint64_t seed = 0;
  InstanceInfo info;
  std::optional<std::size_t> gamma, domatic, gamma_total, domatic_total;
  std::vector<CheckStatus> statuses;  // aligned with kCheckIds; empty on error
  std::string oracle = "off";         // off | ok | skipped | mismatch
  std::string error;
  double wall_ms = 0.0;
};

/// One row per instance, ordered by instance id regardless of --jobs.
std::vector<EnsembleRow> solve_ensemble(const RunConfig& config);

void write_csv(std::ostream& out, const std::vector<EnsembleRow>& rows, bool timing);

nlohmann::json summarize(const RunConfig& config, const std::vector<EnsembleRow>& rows);

}  // namespace ktuple::cli

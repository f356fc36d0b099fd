#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ktuple/domination.hpp"
#include "ktuple/generators.hpp"

namespace ktuple::cli {

enum class Subcommand { gen, compute, verify, ensemble };

enum class EnsembleModel { gnp, random_regular };

// Exit codes. Anything else non-zero comes from argument parsing.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;  // violated check or oracle mismatch
inline constexpr int kExitError = 2;      // bad config, unreadable input, precondition failure

struct RunConfig {
  Subcommand subcommand = Subcommand::compute;
  int k = 1;
  std::optional<Mode> mode;  // unset: both modes

  // Input: exactly one of these for compute/verify; gen takes the family only.
  std::optional<std::string> input_path;
  std::optional<GraphSpec> spec;

  // Outputs; empty means stdout.
  std::string output_path;
  std::string report_path;
  std::string certificate_path;
  std::string csv_path;
  std::string summary_path;

  bool oracle = false;
  std::size_t gamma_oracle_cap = kGammaOracleCap;

  // Ensemble parameters.
  EnsembleModel model = EnsembleModel::gnp;
  std::size_t n = 0;
  double p = 0.0;
  std::size_t r = 0;
  std::size_t count = 0;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  bool timing = false;
};

/// Throws std::invalid_argument describing the first broken invariant.
void validate(const RunConfig& config);

/// Builds a GraphSpec from "family param..." tokens, e.g. {"complete", "6"}
/// or {"gnp", "8", "0.5"}. The seed, join rule and complement flag are
/// passed separately because they come from options.
GraphSpec parse_graph_tokens(const std::vector<std::string>& tokens, std::optional<std::uint64_t> seed,
                             JoinRule::Kind rule, bool take_complement);

/// Executes a validated config. Diagnostics go to `err`; artifacts whose
/// path is empty go to `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a config and runs it.
int main_entry(int argc, char** argv);

/// Columns of the ensemble CSV, in order.
std::vector<std::string> ensemble_columns(bool timing);

}  // namespace ktuple::cli

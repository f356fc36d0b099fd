#include "ktuple/cli/run.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ensemble.hpp"
#include "ktuple/domatic.hpp"
#include "ktuple/errors.hpp"
#include "ktuple/graph_io.hpp"
#include "ktuple/invariants.hpp"
#include "ktuple/report.hpp"
#include "ktuple/theorems.hpp"

namespace ktuple::cli {

using nlohmann::json;

namespace {

template <typename T>
T parse_number(const std::string& text, const char* what) {
  T value{};
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
  return value;
}

void expect_params(const std::vector<std::string>& tokens, std::size_t count, const char* usage) {
  if (tokens.size() != count + 1) throw std::invalid_argument(std::string("usage: ") + usage);
}

bool is_random(const GraphSpec& spec) {
  using F = GraphSpec::Family;
  return spec.family == F::gnp || spec.family == F::random_regular ||
         (spec.family == F::k_join && spec.rule.kind == JoinRule::Kind::exactly_k);
}

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  write(file);
  if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

struct LoadedGraph {
  Graph graph;
  std::string source;
};

LoadedGraph load_graph(const RunConfig& config, std::ostream& err) {
  if (config.input_path) {
    auto parsed = read_graph_file(*config.input_path);
    for (const auto& w : parsed.warnings) err << "warning: " << *config.input_path << ": " << w << "\n";
    return {std::move(parsed.graph), *config.input_path};
  }
  return {build_graph(*config.spec), describe(*config.spec)};
}

void restrict_mode(InvariantReport& report, std::optional<Mode> mode) {
  if (!mode) return;
  if (*mode == Mode::closed) {
    report.gamma_total.reset();
    report.domatic_total.reset();
  } else {
    report.gamma.reset();
    report.domatic.reset();
  }
}

json certificates_json(const InvariantReport& report) {
  auto set_or_null = [](const std::optional<GammaResult>& r) { return r ? json(r->witness) : json(nullptr); };
  auto classes_or_null = [](const std::optional<DomaticResult>& r) {
    return r ? json(r->witness.classes) : json(nullptr);
  };
  return json{{"k", report.instance.k},
              {"gamma_xk", set_or_null(report.gamma)},
              {"gamma_xkt", set_or_null(report.gamma_total)},
              {"d_xk", classes_or_null(report.domatic)},
              {"d_xkt", classes_or_null(report.domatic_total)}};
}

}  // namespace

OracleComparison compare_with_oracles(const Graph& g, const InvariantReport& report, std::size_t gamma_cap) {
  OracleComparison result;
  const int k = report.instance.k;
  auto gamma = [&](const std::optional<GammaResult>& r, const char* name) {
    if (!r) return;
    if (g.order() > gamma_cap) {
      result.skipped.push_back(name);
      return;
    }
    const auto expected = gamma_oracle(g, k, r->mode, gamma_cap).value;
    result.checked.push_back(name);
    if (expected != r->value) {
      result.mismatches.push_back(std::string(name) + ": solver " + std::to_string(r->value) + ", oracle " +
                                  std::to_string(expected));
    }
  };
  auto domatic = [&](const std::optional<DomaticResult>& r, const char* name) {
    if (!r) return;
    if (g.order() > kDomaticOracleCap) {
      result.skipped.push_back(name);
      return;
    }
    const auto expected = d_oracle(g, k, r->witness.mode).value;
    result.checked.push_back(name);
    if (expected != r->value) {
      result.mismatches.push_back(std::string(name) + ": solver " + std::to_string(r->value) + ", oracle " +
                                  std::to_string(expected));
    }
  };
  gamma(report.gamma, "gamma_xk");
  gamma(report.gamma_total, "gamma_xkt");
  domatic(report.domatic, "d_xk");
  domatic(report.domatic_total, "d_xkt");
  if (!report.certificates_valid(g)) result.mismatches.push_back("certificate rejected by predicate");
  return result;
}

void validate(const RunConfig& config) {
  if (config.k < 1) throw std::invalid_argument("--k must be at least 1");
  switch (config.subcommand) {
    case Subcommand::gen:
      if (!config.spec) throw std::invalid_argument("gen needs a graph family");
      if (config.input_path) throw std::invalid_argument("gen does not read --input");
      break;
    case Subcommand::compute:
    case Subcommand::verify:
      if (config.input_path.has_value() == config.spec.has_value()) {
        throw std::invalid_argument("give exactly one of --input or --graph");
      }
      break;
    case Subcommand::ensemble:
      if (!config.seed) throw std::invalid_argument("ensemble needs --seed");
      if (config.count == 0) throw std::invalid_argument("--count must be positive");
      if (config.n == 0) throw std::invalid_argument("--n must be positive");
      if (config.model == EnsembleModel::gnp && !(config.p >= 0.0 && config.p <= 1.0)) {
        throw std::invalid_argument("--p must lie in [0, 1]");
      }
      if (config.model == EnsembleModel::random_regular) {
        if (config.r >= config.n) throw std::invalid_argument("--r must be less than --n");
        if ((config.n * config.r) % 2 != 0) throw std::invalid_argument("--n * --r must be even");
      }
      break;
  }
}

GraphSpec parse_graph_tokens(const std::vector<std::string>& tokens, std::optional<std::uint64_t> seed,
                             JoinRule::Kind rule, bool take_complement) {
  if (tokens.empty()) throw std::invalid_argument("missing graph family");
  using F = GraphSpec::Family;
  GraphSpec spec;
  spec.family = parse_family(tokens[0]);
  spec.take_complement = take_complement;
  auto size = [&](std::size_t i) { return parse_number<std::size_t>(tokens[i], "graph parameter"); };
  switch (spec.family) {
    case F::complete:
    case F::cycle:
    case F::path:
      expect_params(tokens, 1, "<complete|cycle|path> N");
      spec.a = size(1);
      break;
    case F::complete_bipartite:
      expect_params(tokens, 2, "complete-bipartite A B");
      spec.a = size(1);
      spec.b = size(2);
      break;
    case F::disjoint_union:
      expect_params(tokens, 2, "disjoint-union COPIES ORDER");
      spec.a = size(1);
      spec.b = size(2);
      break;
    case F::k_join:
      expect_params(tokens, 3, "k-join A B K");
      spec.a = size(1);
      spec.b = size(2);
      spec.k = size(3);
      break;
    case F::clique_chain:
      expect_params(tokens, 1, "clique-chain K");
      spec.k = size(1);
      break;
    case F::gnp:
      expect_params(tokens, 2, "gnp N P");
      spec.a = size(1);
      spec.p = parse_number<double>(tokens[2], "edge probability");
      break;
    case F::random_regular:
      expect_params(tokens, 2, "random-regular N R");
      spec.a = size(1);
      spec.b = size(2);
      break;
    case F::from_file:
      expect_params(tokens, 1, "from-file PATH");
      spec.path = tokens[1];
      break;
  }
  if (rule == JoinRule::Kind::exactly_k) {
    if (spec.family != F::k_join) throw std::invalid_argument("--rule applies to k-join only");
    spec.rule = JoinRule::exactly_k(seed.value_or(0));
  }
  if (is_random(spec)) {
    if (!seed) throw std::invalid_argument("random family '" + tokens[0] + "' needs --seed");
    spec.seed = *seed;
    if (spec.family == F::k_join) spec.rule.seed = *seed;
  }
  return spec;
}

namespace {

int run_gen(const RunConfig& config, std::ostream& out) {
  const Graph g = build_graph(*config.spec);
  emit(config.output_path, out, [&](std::ostream& os) { write_graph(os, g); });
  return kExitOk;
}

json oracle_json(const OracleComparison& cmp) {
  return json{{"checked", cmp.checked}, {"skipped", cmp.skipped}, {"mismatches", cmp.mismatches}};
}

int run_compute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto loaded = load_graph(config, err);
  auto report = compute_invariants(loaded.graph, config.k);
  restrict_mode(report, config.mode);

  json doc{{"source", loaded.source}, {"invariants", report}, {"certificates_valid", report.certificates_valid(loaded.graph)}};
  int status = doc["certificates_valid"].get<bool>() ? kExitOk : kExitViolation;
  if (config.oracle) {
    const auto cmp = compare_with_oracles(loaded.graph, report, config.gamma_oracle_cap);
    doc["oracle"] = oracle_json(cmp);
    if (!cmp.mismatches.empty()) status = kExitViolation;
  }
  emit(config.report_path, out, [&](std::ostream& os) { os << doc.dump(2) << "\n"; });
  if (!config.certificate_path.empty()) {
    emit(config.certificate_path, out, [&](std::ostream& os) { os << certificates_json(report).dump(2) << "\n"; });
  }
  return status;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto loaded = load_graph(config, err);
  const auto report = verify_all(loaded.graph, config.k);

  json doc = report;
  doc["source"] = loaded.source;
  doc["certificates_valid"] = report.invariants.certificates_valid(loaded.graph);
  int status = report.has_violation() || !doc["certificates_valid"].get<bool>() ? kExitViolation : kExitOk;
  if (config.oracle) {
    const auto cmp = compare_with_oracles(loaded.graph, report.invariants, config.gamma_oracle_cap);
    doc["oracle"] = oracle_json(cmp);
    if (!cmp.mismatches.empty()) status = kExitViolation;
  }
  emit(config.report_path, out, [&](std::ostream& os) { os << doc.dump(2) << "\n"; });
  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::violated) err << "violated: " << c.id << " (" << c.lhs << " vs " << c.rhs << ")\n";
  }
  return status;
}

int run_ensemble(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto rows = solve_ensemble(config);
  emit(config.csv_path, out, [&](std::ostream& os) { write_csv(os, rows, config.timing); });
  const auto summary = summarize(config, rows);
  if (!config.summary_path.empty()) {
    emit(config.summary_path, out, [&](std::ostream& os) { os << summary.dump(2) << "\n"; });
  }
  const auto violated = summary.at("violated_instances").get<std::size_t>();
  const auto mismatched = summary.at("oracle_mismatches").get<std::size_t>();
  err << "ensemble: " << rows.size() << " instances, " << summary.at("errors").get<std::size_t>() << " errors, "
      << violated << " with violations, " << mismatched << " oracle mismatches\n";
  return violated + mismatched > 0 ? kExitViolation : kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.subcommand) {
      case Subcommand::gen:
        return run_gen(config, out);
      case Subcommand::compute:
        return run_compute(config, out, err);
      case Subcommand::verify:
        return run_verify(config, out, err);
      case Subcommand::ensemble:
        return run_ensemble(config, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace ktuple::cli

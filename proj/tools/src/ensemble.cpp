#include "ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <map>
#include <ostream>
#include <thread>

#include "ktuple/generators.hpp"
#include "ktuple/rng.hpp"

namespace ktuple::cli {

namespace {

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("NA");
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string value_or_na(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "NA"; }

std::string_view model_name(EnsembleModel model) {
  return model == EnsembleModel::gnp ? "gnp" : "random-regular";
}

EnsembleRow solve_instance(const RunConfig& config, std::size_t id) {
  EnsembleRow row;
  row.instance = id;
  row.model = model_name(config.model);
  row.n_param = config.n;
  if (config.model == EnsembleModel::gnp) {
    row.p = format_double(config.p);
  } else {
    row.r = std::to_string(config.r);
  }
  row.k = config.k;
  row.seed = mix_seed(*config.seed, id);
  const auto start = std::chrono::steady_clock::now();
  try {
    const Graph g = config.model == EnsembleModel::gnp ? gnp(config.n, config.p, row.seed)
                                                       : random_regular(config.n, config.r, row.seed);
    const auto report = verify_all(g, config.k);
    row.info = report.invariants.instance;
    if (report.invariants.gamma) row.gamma = report.invariants.gamma->value;
    if (report.invariants.domatic) row.domatic = report.invariants.domatic->value;
    if (report.invariants.gamma_total) row.gamma_total = report.invariants.gamma_total->value;
    if (report.invariants.domatic_total) row.domatic_total = report.invariants.domatic_total->value;
    for (const auto& c : report.checks) row.statuses.push_back(c.status);
    if (config.oracle) {
      const auto cmp = compare_with_oracles(g, report.invariants, config.gamma_oracle_cap);
      row.oracle = !cmp.mismatches.empty() ? "mismatch" : (!cmp.skipped.empty() ? "skipped" : "ok");
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

std::vector<std::string> ensemble_columns(bool timing) {
  std::vector<std::string> columns{"instance", "model",     "n_param",  "p",         "r",      "seed",
                                   "n",        "edges",     "min_degree", "max_degree", "k",    "gamma_xk",
                                   "d_xk",     "gamma_xkt", "d_xkt"};
  for (auto id : kCheckIds) columns.emplace_back(id);
  columns.emplace_back("oracle");
  columns.emplace_back("error");
  if (timing) columns.emplace_back("wall_ms");
  return columns;
}

std::vector<EnsembleRow> solve_ensemble(const RunConfig& config) {
  std::vector<EnsembleRow> rows(config.count);
  const unsigned workers =
      std::max(1u, std::min<unsigned>(config.jobs == 0 ? std::thread::hardware_concurrency() : config.jobs,
                                      static_cast<unsigned>(config.count)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t id = next++; id < config.count; id = next++) rows[id] = solve_instance(config, id);
  };
  if (workers == 1) {
    work();
    return rows;
  }
  std::vector<std::jthread> pool;
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  pool.clear();
  return rows;
}

void write_csv(std::ostream& out, const std::vector<EnsembleRow>& rows, bool timing) {
  const auto columns = ensemble_columns(timing);
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << "\n";
  for (const auto& row : rows) {
    out << row.instance << "," << row.model << "," << row.n_param << "," << row.p << "," << row.r << ","
        << row.seed;
    if (row.error.empty()) {
      out << "," << row.info.n << "," << row.info.edges << "," << row.info.min_degree << "," << row.info.max_degree;
    } else {
      out << ",NA,NA,NA,NA";
    }
    out << "," << row.k << "," << value_or_na(row.gamma) << "," << value_or_na(row.domatic) << ","
        << value_or_na(row.gamma_total) << "," << value_or_na(row.domatic_total);
    for (std::size_t i = 0; i < std::size(kCheckIds); ++i) {
      out << "," << (i < row.statuses.size() ? std::string(to_string(row.statuses[i])) : std::string("NA"));
    }
    out << "," << row.oracle << "," << csv_field(row.error);
    if (timing) out << "," << format_double(row.wall_ms);
    out << "\n";
  }
}

nlohmann::json summarize(const RunConfig& config, const std::vector<EnsembleRow>& rows) {
  std::map<std::string, std::map<std::string, std::size_t>> per_check;
  std::size_t errors = 0, violated = 0, mismatches = 0;
  for (const auto& row : rows) {
    if (!row.error.empty()) ++errors;
    if (row.oracle == "mismatch") ++mismatches;
    bool any = false;
    for (std::size_t i = 0; i < row.statuses.size(); ++i) {
      ++per_check[std::string(kCheckIds[i])][std::string(to_string(row.statuses[i]))];
      any = any || row.statuses[i] == CheckStatus::violated;
    }
    if (any) ++violated;
  }
  return nlohmann::json{{"model", model_name(config.model)},
                        {"n", config.n},
                        {"p", config.p},
                        {"r", config.r},
                        {"k", config.k},
                        {"count", config.count},
                        {"seed", *config.seed},
                        {"instances", rows.size()},
                        {"errors", errors},
                        {"violated_instances", violated},
                        {"oracle_mismatches", mismatches},
                        {"checks", per_check}};
}

}  // namespace ktuple::cli

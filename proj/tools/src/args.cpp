#include <iostream>
#include <map>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "ktuple/cli/run.hpp"

namespace ktuple::cli {

namespace {

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::string csv_help() {
  std::string text =
      "\nEnsemble CSV columns (header row first, one row per instance, ordered by instance):\n  ";
  const auto columns = ensemble_columns(true);
  for (std::size_t i = 0; i < columns.size(); ++i) text += (i ? "," : "") + columns[i];
  text +=
      "\n  Invariants whose degree precondition fails are written as NA. Check columns hold\n"
      "  holds | sharp | violated | not-applicable. wall_ms appears only with --timing.\n"
      "  Instance i is generated from seed mix(--seed, i), so rows do not depend on --jobs.\n"
      "Exit status: 0 ok, 1 violated check or oracle mismatch, 2 bad input or configuration.\n";
  return text;
}

}  // namespace

int main_entry(int argc, char** argv) {
  CLI::App app{"Exact k-tuple domination and domatic numbers with theorem verification"};
  app.require_subcommand(1);
  app.footer(csv_help());

  RunConfig config;
  std::string mode_text;
  std::string rule_text = "all";
  std::string graph_text;
  std::string input_path;
  std::uint64_t seed = 0;
  bool complement = false;
  std::vector<std::string> gen_tokens;

  const std::map<std::string, std::string> modes{{"closed", "closed"}, {"open", "open"}};

  auto add_graph_options = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Seed for random families");
    sub->add_option("--rule", rule_text, "k-join rule: all or exact")->check(CLI::IsMember({"all", "exact"}));
    sub->add_flag("--complement", complement, "Use the complement of the generated graph");
  };
  auto add_instance_options = [&](CLI::App* sub) {
    auto* input = sub->add_option("--input,-i", input_path, "Edge-list file");
    sub->add_option("--graph,-g", graph_text, "Family and parameters, e.g. \"complete 6\"")->excludes(input);
    add_graph_options(sub);
    sub->add_option("--k,-k", config.k, "Multiplicity k >= 1")->required();
    sub->add_option("--report,-r", config.report_path, "JSON report path (default stdout)");
    sub->add_flag("--oracle", config.oracle, "Cross-check against brute force where the instance is small enough");
    sub->add_option("--gamma-oracle-cap", config.gamma_oracle_cap, "Largest n handed to the subset oracle");
  };

  auto* gen = app.add_subcommand("gen", "Write the edge list of a graph family");
  gen->add_option("family", gen_tokens,
                  "complete N | complete-bipartite A B | cycle N | path N | disjoint-union COPIES ORDER |\n"
                  "k-join A B K | clique-chain K | gnp N P | random-regular N R")
      ->required();
  add_graph_options(gen);
  gen->add_option("--output,-o", config.output_path, "Output path (default stdout)");

  auto* compute = app.add_subcommand("compute", "Compute the invariants of one graph with certificates");
  add_instance_options(compute);
  compute->add_option("--mode", mode_text, "closed or open (default both)")->check(CLI::IsMember(modes));
  compute->add_option("--certificate,-c", config.certificate_path, "Write the witnesses to a separate file");

  auto* verify = app.add_subcommand("verify", "Evaluate every theorem check on one graph");
  add_instance_options(verify);

  auto* ensemble = app.add_subcommand("ensemble", "Verify a seeded random ensemble and write CSV");
  std::string model_text = "gnp";
  ensemble->add_option("--model", model_text, "gnp or random-regular")
      ->check(CLI::IsMember({"gnp", "random-regular"}));
  ensemble->add_option("--n", config.n, "Order of each instance")->required();
  ensemble->add_option("--p", config.p, "Edge probability (gnp)");
  ensemble->add_option("--r", config.r, "Degree (random-regular)");
  ensemble->add_option("--count", config.count, "Number of instances")->required();
  ensemble->add_option("--seed", seed, "Master seed")->required();
  ensemble->add_option("--k,-k", config.k, "Multiplicity k >= 1")->required();
  ensemble->add_option("--csv", config.csv_path, "CSV path (default stdout)");
  ensemble->add_option("--summary", config.summary_path, "JSON summary path");
  ensemble->add_option("--jobs,-j", config.jobs, "Worker threads (0 = hardware concurrency)");
  ensemble->add_flag("--oracle", config.oracle, "Cross-check every instance against brute force");
  ensemble->add_flag("--timing", config.timing, "Append a wall_ms column (not reproducible)");
  ensemble->add_option("--gamma-oracle-cap", config.gamma_oracle_cap, "Largest n handed to the subset oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    const auto rule = rule_text == "exact" ? JoinRule::Kind::exactly_k : JoinRule::Kind::all;
    auto* active = app.get_subcommands().front();
    const bool has_seed = active->count("--seed") > 0;
    const std::optional<std::uint64_t> seed_opt = has_seed ? std::optional(seed) : std::nullopt;
    if (active == gen) {
      config.subcommand = Subcommand::gen;
      config.spec = parse_graph_tokens(gen_tokens, seed_opt, rule, complement);
    } else if (active == ensemble) {
      config.subcommand = Subcommand::ensemble;
      config.model = model_text == "gnp" ? EnsembleModel::gnp : EnsembleModel::random_regular;
      config.seed = seed;
    } else {
      config.subcommand = active == compute ? Subcommand::compute : Subcommand::verify;
      if (!input_path.empty()) config.input_path = input_path;
      if (!graph_text.empty()) config.spec = parse_graph_tokens(split_words(graph_text), seed_opt, rule, complement);
      if (!mode_text.empty()) config.mode = parse_mode(mode_text);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return run(config, std::cout, std::cerr);
}

}  // namespace ktuple::cli

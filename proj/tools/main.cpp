// Command-line front end: evaluate risk lower bounds against oracle risks
// for problems described by a JSON config.
//
//   bayesbound run <config.json> [--output table|csv|json] [--seed N] [--mc-samples N]
//   bayesbound validate <config.json>
//   bayesbound suite [--seed N]
//
// Exit status: 0 all bounds hold, 1 a bound exceeded its oracle, 2 config
// or usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bayesbound/report.hpp"

namespace {

int load_config(const std::string& path, nlohmann::json* out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open config file '" << path << "'\n";
    return 2;
  }
  try {
    in >> *out;
  } catch (const std::exception& e) {
    std::cerr << "error: config is not valid JSON: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayes / minimax risk lower-bound evaluator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output = "table";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> mc_samples;

  auto* run = app.add_subcommand("run", "Evaluate the bounds in a config against the oracle");
  run->add_option("config", config_path, "JSON config file")->required();
  run->add_option("--output", output, "Output format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  run->add_option("--seed", seed, "Override the RNG seed");
  run->add_option("--mc-samples", mc_samples, "Override the Monte Carlo sample count");

  auto* validate = app.add_subcommand("validate", "Check a config against the schema");
  validate->add_option("config", config_path, "JSON config file")->required();

  auto* suite = app.add_subcommand("suite", "Run the built-in corpus, CSV to stdout");
  suite->add_option("--seed", seed, "Override the RNG seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      nlohmann::json config;
      if (int rc = load_config(config_path, &config)) return rc;
      const auto diags = bayesbound::validate_config(config);
      if (diags.empty()) {
        std::cout << "ok\n";
        return 0;
      }
      for (const auto& d : diags) std::cerr << d << "\n";
      return 2;
    }
    if (suite->parsed()) {
      std::uint64_t s = 1;
      if (const char* env = std::getenv("BAYESBOUND_SEED")) s = std::strtoull(env, nullptr, 10);
      if (seed) s = *seed;
      int status = 0;
      std::cout << bayesbound::run_suite_csv(s, &status);
      return status;
    }
    // run
    nlohmann::json config;
    if (int rc = load_config(config_path, &config)) return rc;
    const bayesbound::RunResult result = bayesbound::run_config(config, seed, mc_samples);
    if (result.exit_status == 2) {
      for (const auto& d : result.diagnostics) std::cerr << d << "\n";
      return 2;
    }
    if (output == "csv")
      std::cout << bayesbound::to_csv(result);
    else if (output == "json")
      std::cout << bayesbound::to_json(result);
    else
      std::cout << bayesbound::to_table(result);
    return result.exit_status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

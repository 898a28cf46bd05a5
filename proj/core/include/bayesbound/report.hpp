#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bayesbound {

// One row of a run report: a bound value next to the oracle risk it must
// not exceed. The CSV schema (bound,f,informativity,exactness,value,
// oracle,status) is frozen; see README.
struct ReportRow {
  std::string bound;
  std::string f;               // generator label, or "-"
  std::string informativity;   // method, or "-"
  std::string exactness;       // "exact" | "upper_bound" | "-"
  double value = 0.0;
  double oracle = 0.0;
  std::string status;          // "PASS" | "FAIL" | "SKIP (reason)"
};

struct RunResult {
  std::vector<ReportRow> rows;
  double oracle_risk = 0.0;
  std::string oracle_kind;
  int exit_status = 0;  // 0 ok, 1 dominance violation/bound error, 2 config error
  std::vector<std::string> diagnostics;  // config errors when exit_status == 2
};

// Schema validation: returns a list of "path: message" diagnostics; empty
// means valid.
std::vector<std::string> validate_config(const nlohmann::json& config);

// Execute a validated config. seed_override beats the BAYESBOUND_SEED
// environment variable, which beats the config's "seed" field.
RunResult run_config(const nlohmann::json& config,
                     std::optional<std::uint64_t> seed_override = std::nullopt,
                     std::optional<std::size_t> mc_samples_override = std::nullopt);

// Output formatting (deterministic: %.12g numbers, fixed column order).
std::string to_csv(const RunResult& result);
std::string to_json(const RunResult& result);
std::string to_table(const RunResult& result);

// The registered bound identifiers (for diagnostics and docs).
const std::vector<std::string>& bound_registry();

// Run the built-in acceptance corpus and return its CSV (byte-identical
// for identical seeds). exit_status_out, if given, receives the worst
// per-run exit status.
std::string run_suite_csv(std::uint64_t seed, int* exit_status_out = nullptr);

}  // namespace bayesbound

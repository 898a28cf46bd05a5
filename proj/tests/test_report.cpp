#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "bayesbound/report.hpp"

using namespace bayesbound;
using nlohmann::json;

namespace {

json bsc_config() {
  json cfg;
  cfg["problem"]["type"] = "discrete";
  cfg["problem"]["channel"] = {{0.9, 0.1}, {0.1, 0.9}};
  cfg["problem"]["prior"] = {0.5, 0.5};
  cfg["problem"]["loss"] = {{0.0, 1.0}, {1.0, 0.0}};
  cfg["bounds"] = {"generalized_fano", "chi2_zero_one", "le_cam"};
  cfg["seed"] = 1;
  return cfg;
}

}  // namespace

TEST_CASE("validate_config") {
  CHECK(validate_config(bsc_config()).empty());

  json bad = bsc_config();
  bad["problem"]["channel"] = {{0.5, 0.4}, {0.1, 0.9}};  // row sums to 0.9
  auto diags = validate_config(bad);
  REQUIRE_FALSE(diags.empty());
  CHECK(diags[0].find("channel[0]") != std::string::npos);

  json neg = bsc_config();
  neg["problem"]["prior"] = {-0.5, 1.5};
  diags = validate_config(neg);
  REQUIRE_FALSE(diags.empty());
  CHECK(diags[0].find("prior") != std::string::npos);

  json unknown = bsc_config();
  unknown["bounds"] = {"not_a_bound"};
  diags = validate_config(unknown);
  REQUIRE_FALSE(diags.empty());
  CHECK(diags[0].find("not_a_bound") != std::string::npos);
  CHECK(diags[0].find("generalized_fano") != std::string::npos);  // names the registry

  CHECK_FALSE(validate_config(json::array()).empty());
  CHECK_FALSE(validate_config(json::object()).empty());
}

TEST_CASE("run_config on BSC") {
  RunResult res = run_config(bsc_config());
  CHECK(res.exit_status == 0);
  CHECK(res.oracle_risk == doctest::Approx(0.1));
  REQUIRE(res.rows.size() == 3);
  for (const auto& row : res.rows) {
    CHECK(row.value <= 0.1 + 1e-9);
    CHECK(row.status == "PASS");
  }
  // Malformed config comes back with status 2, not an exception.
  json bad = bsc_config();
  bad["problem"]["channel"] = {{0.5, 0.4}, {0.1, 0.9}};
  RunResult err = run_config(bad);
  CHECK(err.exit_status == 2);
  CHECK_FALSE(err.diagnostics.empty());
}

TEST_CASE("family config wiring") {
  json cfg;
  cfg["problem"] = {{"type", "family"}, {"name", "gaussian_location"},
                    {"d", 2}, {"sigma", 1.0}, {"gamma", 14.142135623730951}};
  cfg["bounds"] = {"tutu_chi2", "tutu_kl_partitioned"};
  cfg["oracle"] = {{"kind", "mc"}, {"n_samples", 2000}};
  cfg["seed"] = 5;
  RunResult res = run_config(cfg);
  CHECK(res.exit_status == 0);
  REQUIRE(res.rows.size() == 2);
  CHECK(res.rows[0].bound == "tutu_chi2");
  CHECK(res.rows[1].bound == "tutu_kl_partitioned");
  for (const auto& row : res.rows) CHECK(row.status == "PASS");
}

TEST_CASE("deterministic output formats") {
  RunResult a = run_config(bsc_config());
  RunResult b = run_config(bsc_config());
  CHECK(to_csv(a) == to_csv(b));
  CHECK(to_json(a) == to_json(b));
  CHECK(to_table(a) == to_table(b));
  const std::string csv = to_csv(a);
  CHECK(csv.rfind("bound,f,informativity,exactness,value,oracle,status\n", 0) == 0);

  int s1 = 0, s2 = 0;
  CHECK(run_suite_csv(42, &s1) == run_suite_csv(42, &s2));
  CHECK(s1 == s2);
}

TEST_CASE("seed override precedence") {
  json cfg;
  cfg["problem"] = {{"type", "family"}, {"name", "spiked"}, {"n", 64}, {"d", 4}};
  cfg["bounds"] = {"spiked"};
  cfg["oracle"] = {{"kind", "mc"}, {"n_samples", 1000}};
  cfg["seed"] = 5;
  RunResult base = run_config(cfg);
  RunResult override_seed = run_config(cfg, 99);
  CHECK(base.oracle_risk != override_seed.oracle_risk);
  RunResult same = run_config(cfg, 99);
  CHECK(override_seed.oracle_risk == same.oracle_risk);
}

TEST_CASE("bound registry") {
  const auto& reg = bound_registry();
  CHECK(reg.size() >= 16);
  for (const char* name : {"generalized_fano", "general_kl", "birge_gushchin_chi2",
                           "tutu_chi2", "spiked", "glm"}) {
    bool found = false;
    for (const auto& r : reg) found |= (r == name);
    CHECK(found);
  }
}

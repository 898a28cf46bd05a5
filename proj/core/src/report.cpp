#include "bayesbound/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "bayesbound/bounds.hpp"
#include "bayesbound/models.hpp"
#include "bayesbound/oracle.hpp"

namespace bayesbound {

namespace {

constexpr double kDominanceSlack = 1e-9;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string exactness_str(const std::optional<InformativityEstimate>& e) {
  if (!e) return "-";
  return e->exactness == Exactness::exact ? "exact" : "upper_bound";
}

ReportRow row_from(const BoundReport& rep, const std::string& f_label, double oracle) {
  ReportRow row;
  row.bound = rep.bound_name;
  row.f = f_label;
  row.informativity = rep.informativity_input ? rep.informativity_input->method : "-";
  row.exactness = exactness_str(rep.informativity_input);
  row.value = rep.value;
  row.oracle = oracle;
  if (!rep.valid)
    row.status = "SKIP (" + rep.reason + ")";
  else
    row.status = rep.value <= oracle + kDominanceSlack ? "PASS" : "FAIL";
  return row;
}

ReportRow skip_row(const std::string& bound, const std::string& reason, double oracle) {
  ReportRow row;
  row.bound = bound;
  row.f = "-";
  row.informativity = "-";
  row.exactness = "-";
  row.value = 0.0;
  row.oracle = oracle;
  row.status = "SKIP (" + reason + ")";
  return row;
}

const ConvexGenerator& generator_for(const std::string& name) {
  static const ConvexGenerator kl = kl_generator();
  static const ConvexGenerator chi2 = chi2_generator();
  static const ConvexGenerator tv = tv_generator();
  static const ConvexGenerator hell = hellinger_generator();
  if (name.find("chi2") != std::string::npos) return chi2;
  if (name.find("tv") != std::string::npos) return tv;
  if (name.find("hellinger") != std::string::npos) return hell;
  return kl;
}

InformativityEstimate best_informativity(const DiscreteProblem& problem,
                                         const std::string& label) {
  if (label == "kl") return mutual_information_exact(problem);
  if (label == "chi2") return chi2_informativity_exact(problem);
  if (label == "hellinger") return hellinger_informativity_exact(problem);
  // TV has no exact closed form here; the mixture center gives an upper bound.
  return informativity_via_center(tv_generator(), problem, problem.marginal());
}

void run_discrete_bound(const std::string& name, const DiscreteProblem& problem,
                        double bayes_risk, RunResult* out) {
  const bool zero_one = problem.zero_one_loss();
  auto need_zero_one = [&](const std::string& why) {
    out->rows.push_back(skip_row(name, why, bayes_risk));
  };
  if (name == "generalized_fano") {
    if (!zero_one) return need_zero_one("zero-one loss required");
    const double szb = sup_zero_ball(problem);
    if (szb <= 0.0 || szb >= 1.0) return need_zero_one("degenerate zero-loss ball");
    const auto info = mutual_information_exact(problem);
    BoundReport rep;
    rep.bound_name = name;
    rep.informativity_input = info;
    rep.value = generalized_fano(info.value, 1.0 - szb, szb);
    out->rows.push_back(row_from(rep, "kl", bayes_risk));
  } else if (name == "chi2_zero_one" || name == "tv_zero_one" || name == "hellinger_zero_one") {
    if (!zero_one) return need_zero_one("zero-one loss required");
    const double r0 = r0_zero_one(problem);
    const std::string label = name.substr(0, name.find("_zero_one"));
    const auto info = best_informativity(problem, label);
    BoundReport rep;
    if (name == "chi2_zero_one")
      rep = zero_one_bound(ZeroOneKind::chi2, r0, info);
    else if (name == "tv_zero_one")
      rep = zero_one_bound(ZeroOneKind::tv, r0, info);
    else
      rep = zero_one_bound(ZeroOneKind::hellinger, r0, info, h_squared_prior_average(problem));
    out->rows.push_back(row_from(rep, label, bayes_risk));
  } else if (name.rfind("generic_", 0) == 0) {
    if (!zero_one) return need_zero_one("zero-one loss required");
    const std::string label = name.substr(8);
    const ConvexGenerator& f = generator_for(label);
    const double r0 = r0_zero_one(problem);
    const auto info = best_informativity(problem, label);
    BoundReport rep = zero_one_bound(ZeroOneKind::generic, r0, info, std::nullopt, &f);
    out->rows.push_back(row_from(rep, label, bayes_risk));
  } else if (name.rfind("general_", 0) == 0) {
    const std::string label = name.substr(8);
    const ConvexGenerator& f = generator_for(label);
    const auto info = best_informativity(problem, label);
    BoundReport rep = general_bound(f, info.value, SmallBallProfile::from_problem(problem));
    rep.informativity_input = info;
    out->rows.push_back(row_from(rep, label, bayes_risk));
  } else if (name == "le_cam") {
    // Split the hypotheses in half and compare the prior-weighted side
    // marginals.  This two-composite bound is only valid for the strict
    // identification loss (one action per hypothesis, loss 1{a != theta}):
    // there, any rule pays at least min(W0(x), W1(x)) at each observation,
    // where W_s(x) = sum over side s of w(theta) P_theta(x), because the
    // selected action can sit in at most one side.
    const std::size_t n = problem.num_hypotheses();
    auto identification = [&] {
      if (problem.num_actions() != n) return false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
          if (problem.loss[i][a] != (i == a ? 0.0 : 1.0)) return false;
      return true;
    };
    if (n < 2) return need_zero_one("need two hypotheses");
    if (!identification()) return need_zero_one("identification loss required");
    std::vector<double> m0(problem.alphabet_size(), 0.0), m1 = m0;
    for (std::size_t t = 0; t < n; ++t) {
      auto& m = t < n / 2 ? m0 : m1;
      for (std::size_t x = 0; x < m.size(); ++x) m[x] += problem.prior[t] * problem.channel[t][x];
    }
    BoundReport rep;
    rep.bound_name = name;
    double affinity = 0.0;
    for (std::size_t x = 0; x < m0.size(); ++x) affinity += std::fmin(m0[x], m1[x]);
    rep.value = affinity;
    out->rows.push_back(row_from(rep, "tv", bayes_risk));
  } else if (name.rfind("birge_gushchin_", 0) == 0) {
    const std::string label = name.substr(15);
    const ConvexGenerator& f = generator_for(label);
    const std::size_t n = problem.num_hypotheses();
    std::vector<std::vector<double>> pairwise(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) pairwise[i][j] = f_divergence(f, problem.channel[i], problem.channel[j]);
    BoundReport rep = birge_gushchin(f, pairwise);
    // Minimax bound: compare against the minimax upper oracle instead.
    const double minimax_up = exact_minimax_upper(problem).risk;
    if (!problem.zero_one_loss()) {
      out->rows.push_back(skip_row(name, "zero-one loss required", minimax_up));
      return;
    }
    out->rows.push_back(row_from(rep, label, minimax_up));
  } else if (name == "braun_pokutta") {
    if (!zero_one) return need_zero_one("zero-one loss required");
    // w_min / w_max range over the prior mass of each action's zero-loss
    // set, not over individual prior weights.
    double w_min = 1.0, w_max = 0.0;
    for (std::size_t act = 0; act < problem.num_actions(); ++act) {
      double wb = 0.0;
      for (std::size_t th = 0; th < problem.num_hypotheses(); ++th)
        if (problem.loss[th][act] == 0.0) wb += problem.prior[th];
      w_min = std::fmin(w_min, wb);
      w_max = std::fmax(w_max, wb);
    }
    if (!(w_max < 1.0) || !(w_min + w_max < 1.0) || !(bayes_risk > 0.0 && bayes_risk < 1.0))
      return need_zero_one("proviso fails (weights or risk out of range)");
    const auto info = mutual_information_exact(problem);
    BoundReport rep;
    rep.bound_name = name;
    rep.informativity_input = info;
    rep.value = std::fmax(0.0, braun_pokutta(info.value, bayes_risk, w_min, w_max));
    out->rows.push_back(row_from(rep, "kl", bayes_risk));
  } else {
    out->rows.push_back(skip_row(name, "unknown bound", bayes_risk));
    out->exit_status = std::max(out->exit_status, 2);
  }
}

}  // namespace

const std::vector<std::string>& bound_registry() {
  static const std::vector<std::string> registry = {
      "generalized_fano", "chi2_zero_one", "tv_zero_one", "hellinger_zero_one",
      "generic_kl", "generic_chi2", "generic_tv", "generic_hellinger",
      "general_kl", "general_chi2", "general_tv", "general_hellinger",
      "le_cam", "birge_gushchin_kl", "birge_gushchin_chi2", "braun_pokutta",
      "tutu_chi2", "tutu_kl_naive", "tutu_kl_partitioned", "spiked", "glm"};
  return registry;
}

std::vector<std::string> validate_config(const nlohmann::json& config) {
  std::vector<std::string> diags;
  if (!config.is_object()) {
    diags.push_back(": config must be a JSON object");
    return diags;
  }
  if (!config.contains("problem") || !config["problem"].is_object()) {
    diags.push_back("problem: missing or not an object");
  } else {
    const auto& p = config["problem"];
    const std::string type = p.value("type", "");
    if (type == "discrete") {
      if (!p.contains("channel") || !p["channel"].is_array() || p["channel"].empty())
        diags.push_back("problem.channel: missing or empty");
      if (!p.contains("prior") || !p["prior"].is_array())
        diags.push_back("problem.prior: missing");
      if (!p.contains("loss") || !p["loss"].is_array()) diags.push_back("problem.loss: missing");
      if (diags.empty()) {
        // Deep validation through DiscreteProblem.
        try {
          DiscreteProblem prob;
          for (std::size_t i = 0; i < p["channel"].size(); ++i) {
            std::vector<double> row = p["channel"][i].get<std::vector<double>>();
            try {
              prob.channel.emplace_back(row);
            } catch (const std::exception& e) {
              diags.push_back("problem.channel[" + std::to_string(i) + "]: " + e.what());
            }
          }
          prob.prior = p["prior"].get<std::vector<double>>();
          prob.loss = p["loss"].get<std::vector<std::vector<double>>>();
          if (diags.empty()) prob.validate();
        } catch (const std::exception& e) {
          diags.push_back(std::string("problem: ") + e.what());
        }
      }
    } else if (type == "family") {
      const std::string name = p.value("name", "");
      if (name != "gaussian_location" && name != "spiked" && name != "glm")
        diags.push_back("problem.name: unknown family '" + name + "'");
      if (name == "gaussian_location" &&
          (!p.contains("d") || !p.contains("sigma") || !p.contains("gamma")))
        diags.push_back("problem: gaussian_location needs d, sigma, gamma");
      if (name == "spiked" && (!p.contains("n") || !p.contains("d")))
        diags.push_back("problem: spiked needs n, d");
      if (name == "glm" && (!p.contains("n") || !p.contains("d")))
        diags.push_back("problem: glm needs n, d");
    } else {
      diags.push_back("problem.type: must be 'discrete' or 'family'");
    }
  }
  if (!config.contains("bounds") || !config["bounds"].is_array() || config["bounds"].empty()) {
    diags.push_back("bounds: missing or empty");
  } else {
    const auto& reg = bound_registry();
    for (std::size_t i = 0; i < config["bounds"].size(); ++i) {
      const std::string name = config["bounds"][i].get<std::string>();
      bool known = false;
      for (const auto& r : reg)
        if (r == name) known = true;
      if (!known) {
        std::string all;
        for (const auto& r : reg) all += (all.empty() ? "" : ", ") + r;
        diags.push_back("bounds[" + std::to_string(i) + "]: unknown bound '" + name +
                        "'; registry: " + all);
      }
    }
  }
  if (config.contains("seed") && !config["seed"].is_number())
    diags.push_back("seed: must be a number");
  if (config.contains("oracle")) {
    const auto& o = config["oracle"];
    const std::string kind = o.value("kind", "exact");
    if (kind != "exact" && kind != "mc") diags.push_back("oracle.kind: must be 'exact' or 'mc'");
  }
  return diags;
}

RunResult run_config(const nlohmann::json& config,
                     std::optional<std::uint64_t> seed_override,
                     std::optional<std::size_t> mc_samples_override) {
  RunResult result;
  result.diagnostics = validate_config(config);
  if (!result.diagnostics.empty()) {
    result.exit_status = 2;
    return result;
  }
  std::uint64_t seed = config.value("seed", 1);
  if (const char* env = std::getenv("BAYESBOUND_SEED"))
    seed = std::strtoull(env, nullptr, 10);
  if (seed_override) seed = *seed_override;
  std::size_t mc_samples = 10000;
  if (config.contains("oracle") && config["oracle"].contains("n_samples"))
    mc_samples = config["oracle"]["n_samples"].get<std::size_t>();
  if (mc_samples_override) mc_samples = *mc_samples_override;

  const auto& pj = config["problem"];
  const std::vector<std::string> bounds = config["bounds"].get<std::vector<std::string>>();

  if (pj["type"] == "discrete") {
    DiscreteProblem problem;
    for (const auto& row : pj["channel"])
      problem.channel.emplace_back(row.get<std::vector<double>>());
    problem.prior = pj["prior"].get<std::vector<double>>();
    problem.loss = pj["loss"].get<std::vector<std::vector<double>>>();
    problem.validate();
    const double bayes = exact_bayes_risk(problem).risk;
    result.oracle_risk = bayes;
    result.oracle_kind = "exact";
    for (const auto& name : bounds) run_discrete_bound(name, problem, bayes, &result);
  } else {
    const std::string name = pj["name"].get<std::string>();
    if (name == "gaussian_location") {
      GaussianLocationFamily fam;
      fam.d = pj["d"].get<int>();
      fam.sigma = pj["sigma"].get<double>();
      fam.gamma = pj["gamma"].get<double>();
      fam.prior = GaussianLocationFamily::PriorKind::uniform_ball;
      const OracleResult oracle =
          mc_integrated_risk(fam, Estimator::posterior_mean_grid, mc_samples, seed);
      result.oracle_risk = oracle.risk;
      result.oracle_kind = "mc";
      for (const auto& bname : bounds) {
        if (bname == "tutu_chi2")
          result.rows.push_back(row_from(tutu_pipeline(fam, TutuRoute::chi2), "chi2", oracle.risk));
        else if (bname == "tutu_kl_naive")
          result.rows.push_back(
              row_from(tutu_pipeline(fam, TutuRoute::kl_naive), "kl", oracle.risk));
        else if (bname == "tutu_kl_partitioned")
          result.rows.push_back(
              row_from(tutu_pipeline(fam, TutuRoute::kl_partitioned), "kl", oracle.risk));
        else
          result.rows.push_back(skip_row(bname, "not applicable to this family", oracle.risk));
      }
    } else if (name == "spiked") {
      SpikedCovarianceFamily fam;
      fam.n = pj["n"].get<int>();
      fam.d = pj["d"].get<int>();
      const OracleResult oracle = mc_integrated_risk(fam, Estimator::pca_top, mc_samples, seed);
      result.oracle_risk = oracle.risk;
      result.oracle_kind = "mc";
      for (const auto& bname : bounds) {
        if (bname == "spiked")
          result.rows.push_back(row_from(spiked_bound(fam, 2.0), "chi2", oracle.risk));
        else
          result.rows.push_back(skip_row(bname, "not applicable to this family", oracle.risk));
      }
    } else {  // glm
      GLMSpec spec;
      const int n = pj["n"].get<int>(), d = pj["d"].get<int>();
      spec.tau = pj.value("tau", 1.0);
      // Deterministic orthogonal-ish design with unit-scale columns.
      spec.design = Eigen::MatrixXd(n, d);
      CounterRng rng(seed ^ 0x5eedULL);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) spec.design(i, j) = rng.normal();
      // Normalize so lambda_max is exactly what we report.
      const Eigen::MatrixXd gram = spec.design.transpose() * spec.design / n;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
      spec.design /= std::sqrt(es.eigenvalues().maxCoeff());
      spec.lambda_max = 1.0;
      spec.a_phi = 1.0;
      spec.curvature_cap = 0.25;  // logistic b'' cap
      const OracleResult oracle =
          mc_integrated_risk(spec, Estimator::projection_lse, mc_samples, seed);
      result.oracle_risk = oracle.risk;
      result.oracle_kind = "mc";
      for (const auto& bname : bounds) {
        if (bname == "glm")
          result.rows.push_back(row_from(glm_bound(spec, 2.0), "kl", oracle.risk));
        else
          result.rows.push_back(skip_row(bname, "not applicable to this family", oracle.risk));
      }
    }
  }
  for (const auto& row : result.rows)
    if (row.status == "FAIL") result.exit_status = std::max(result.exit_status, 1);
  return result;
}

std::string to_csv(const RunResult& result) {
  std::string out = "bound,f,informativity,exactness,value,oracle,status\n";
  for (const auto& r : result.rows) {
    out += r.bound + "," + r.f + "," + r.informativity + "," + r.exactness + "," +
           fmt(r.value) + "," + fmt(r.oracle) + "," + r.status + "\n";
  }
  return out;
}

std::string to_json(const RunResult& result) {
  nlohmann::json j;
  j["oracle_risk"] = result.oracle_risk;
  j["oracle_kind"] = result.oracle_kind;
  j["exit_status"] = result.exit_status;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : result.rows) {
    nlohmann::json row;
    row["bound"] = r.bound;
    row["f"] = r.f;
    row["informativity"] = r.informativity;
    row["exactness"] = r.exactness;
    row["value"] = fmt(r.value);
    row["oracle"] = fmt(r.oracle);
    row["status"] = r.status;
    j["rows"].push_back(row);
  }
  return j.dump(2) + "\n";
}

std::string to_table(const RunResult& result) {
  std::ostringstream oss;
  char line[256];
  std::snprintf(line, sizeof(line), "%-22s %-10s %-22s %-12s %14s %14s  %s\n", "bound", "f",
                "informativity", "exactness", "value", "oracle", "status");
  oss << line;
  for (const auto& r : result.rows) {
    std::snprintf(line, sizeof(line), "%-22s %-10s %-22s %-12s %14s %14s  %s\n",
                  r.bound.c_str(), r.f.c_str(), r.informativity.c_str(), r.exactness.c_str(),
                  fmt(r.value).c_str(), fmt(r.oracle).c_str(), r.status.c_str());
    oss << line;
  }
  return oss.str();
}

std::string run_suite_csv(std::uint64_t seed, int* exit_status_out) {
  int worst = 0;
  std::string csv = "bound,f,informativity,exactness,value,oracle,status\n";
  auto append = [&](const nlohmann::json& config) {
    RunResult res = run_config(config, seed);
    worst = std::max(worst, res.exit_status);
    std::string one = to_csv(res);
    csv += one.substr(one.find('\n') + 1);  // drop the per-run header
  };
  const std::vector<std::string> discrete_bounds = {
      "generalized_fano", "chi2_zero_one", "tv_zero_one", "hellinger_zero_one",
      "generic_kl", "generic_chi2", "generic_tv", "generic_hellinger",
      "general_kl", "general_chi2", "general_tv", "general_hellinger",
      "le_cam", "birge_gushchin_kl", "birge_gushchin_chi2", "braun_pokutta"};

  auto discrete_config = [&](const DiscreteProblem& p) {
    nlohmann::json cfg;
    cfg["problem"]["type"] = "discrete";
    for (const auto& row : p.channel) cfg["problem"]["channel"].push_back(row.weights());
    cfg["problem"]["prior"] = p.prior;
    cfg["problem"]["loss"] = p.loss;
    cfg["bounds"] = discrete_bounds;
    cfg["seed"] = seed;
    return cfg;
  };
  append(discrete_config(make_bsc(0.1)));
  append(discrete_config(make_orthogonal(3)));
  append(discrete_config(make_no_data(4, 3)));
  append(discrete_config(make_random(5, 6, 5, true, seed ^ 0xabcdULL)));
  append(discrete_config(make_random(4, 5, 4, false, seed ^ 0x1234ULL)));

  nlohmann::json tutu;
  tutu["problem"] = {{"type", "family"}, {"name", "gaussian_location"}, {"d", 2},
                     {"sigma", 1.0}, {"gamma", 14.142135623730951}};
  tutu["bounds"] = {"tutu_chi2", "tutu_kl_naive", "tutu_kl_partitioned"};
  tutu["oracle"] = {{"kind", "mc"}, {"n_samples", 2000}};
  tutu["seed"] = seed;
  append(tutu);

  nlohmann::json spiked;
  spiked["problem"] = {{"type", "family"}, {"name", "spiked"}, {"n", 64}, {"d", 4}};
  spiked["bounds"] = {"spiked"};
  spiked["oracle"] = {{"kind", "mc"}, {"n_samples", 1000}};
  spiked["seed"] = seed;
  append(spiked);

  if (exit_status_out) *exit_status_out = worst;
  return csv;
}

}  // namespace bayesbound

// Acceptance gate: one PASS/FAIL line per criterion, exit code = number of
// failed criteria. Each criterion is self-contained and carries its own
// runtime budget where one applies.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "bayesbound/bounds.hpp"
#include "bayesbound/informativity.hpp"
#include "bayesbound/models.hpp"
#include "bayesbound/oracle.hpp"
#include "bayesbound/phi.hpp"
#include "bayesbound/quadrature.hpp"
#include "bayesbound/report.hpp"
#include "bayesbound/rng.hpp"
#include "test_oracles.hpp"

using namespace bayesbound;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title, double budget_seconds = 0.0)
      : number_(number), title_(std::move(title)), budget_(budget_seconds),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& detail) {
    if (!ok && failure_.empty()) failure_ = detail;
  }

  void finish() {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (budget_ > 0.0 && elapsed > budget_ && failure_.empty())
      failure_ = "runtime " + std::to_string(elapsed) + "s exceeded budget " +
                 std::to_string(budget_) + "s";
    if (failure_.empty()) {
      std::printf("criterion %2d: PASS  %s (%.1fs)\n", number_, title_.c_str(), elapsed);
    } else {
      std::printf("criterion %2d: FAIL  %s (%.1fs) -- %s\n", number_, title_.c_str(), elapsed,
                  failure_.c_str());
      ++g_failures;
    }
    std::fflush(stdout);
  }

 private:
  int number_;
  std::string title_;
  double budget_;
  std::string failure_;
  std::chrono::steady_clock::time_point start_;
};

std::string fmt2(double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.6g vs %.6g", a, b);
  return buf;
}

void criterion_1_dominance() {
  Criterion c(1, "dominance of every applicable bound over 1000 random problems", 60.0);
  const ConvexGenerator kl = kl_generator();
  const ConvexGenerator chi2 = chi2_generator();
  const ConvexGenerator tv = tv_generator();
  const ConvexGenerator hell = hellinger_generator();
  for (int seed = 0; seed < 1000; ++seed) {
    CounterRng shape(90000 + seed);
    const int n = 2 + static_cast<int>(shape.next_u64() % 7);
    const int m = 2 + static_cast<int>(shape.next_u64() % 7);
    const int a = 2 + static_cast<int>(shape.next_u64() % 7);
    DiscreteProblem p = make_random(n, m, a, seed % 2 == 0, 10000 + seed);
    const double bayes = exact_bayes_risk(p).risk;
    const auto mi = mutual_information_exact(p);
    const auto ichi = chi2_informativity_exact(p);
    const auto ihell = hellinger_informativity_exact(p);
    const auto itv = informativity_via_center(tv, p, p.marginal());
    auto check = [&](double value, const char* name) {
      c.require(value <= bayes + 1e-9,
                std::string(name) + " seed " + std::to_string(seed) + ": " +
                    fmt2(value, bayes));
    };
    if (p.zero_one_loss()) {
      const double r0 = r0_zero_one(p);
      const double szb = sup_zero_ball(p);
      if (szb > 0.0 && szb < 1.0)
        check(generalized_fano(mi.value, r0, szb), "generalized_fano");
      check(zero_one_bound(ZeroOneKind::chi2, r0, ichi).value, "chi2_zero_one");
      check(zero_one_bound(ZeroOneKind::tv, r0, itv).value, "tv_zero_one");
      auto hb = zero_one_bound(ZeroOneKind::hellinger, r0, ihell,
                               h_squared_prior_average(p));
      if (hb.valid) check(hb.value, "hellinger_zero_one");
      check(zero_one_bound(ZeroOneKind::generic, r0, mi, std::nullopt, &kl).value,
            "generic_kl");
      check(zero_one_bound(ZeroOneKind::generic, r0, ichi, std::nullopt, &chi2).value,
            "generic_chi2");
      check(zero_one_bound(ZeroOneKind::generic, r0, ihell, std::nullopt, &hell).value,
            "generic_hellinger");
      // w_min / w_max range over the prior mass of each action's zero-loss
      // set, not over individual prior weights.
      double w_min = 1.0, w_max = 0.0;
      for (std::size_t act = 0; act < p.num_actions(); ++act) {
        double wb = 0.0;
        for (std::size_t th = 0; th < p.num_hypotheses(); ++th)
          if (p.loss[th][act] == 0.0) wb += p.prior[th];
        w_min = std::fmin(w_min, wb);
        w_max = std::fmax(w_max, wb);
      }
      if (w_max < 1.0 && w_min + w_max < 1.0 && bayes > 0.0 && bayes < 1.0)
        check(std::fmax(0.0, braun_pokutta(mi.value, bayes, w_min, w_max)),
              "braun_pokutta");
    }
    const auto profile = SmallBallProfile::from_problem(p);
    check(general_bound(kl, mi.value, profile).value, "general_kl");
    check(general_bound(chi2, ichi.value, profile).value, "general_chi2");
    check(general_bound(tv, itv.value, profile).value, "general_tv");
    auto gh = general_bound(hell, ihell.value, profile);
    if (gh.valid) check(gh.value, "general_hellinger");
  }
  c.finish();
}

void criterion_2_dpi() {
  Criterion c(2, "data processing inequality on 500 random triples");
  const ConvexGenerator gens[] = {kl_generator(),    chi2_generator(),
                                  tv_generator(),    hellinger_generator(),
                                  power_generator(3.0), power_generator(-1.0)};
  CounterRng rng(20250824);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_u64() % 9);
    std::vector<double> pw(m), qw(m);
    for (double& v : pw) v = rng.exponential();
    for (double& v : qw) v = rng.exponential();
    DiscreteDistribution p = DiscreteDistribution::normalized(pw);
    DiscreteDistribution q = DiscreteDistribution::normalized(qw);
    const int mm = 1 + static_cast<int>(rng.next_u64() % m);
    std::vector<int> merge(m);
    for (auto& t : merge) t = static_cast<int>(rng.next_u64() % mm);
    for (const auto& f : gens) {
      const double before = f_divergence(f, p, q);
      const double after =
          f_divergence(f, pushforward(p, merge, mm), pushforward(q, merge, mm));
      if (std::isfinite(before))
        c.require(after <= before + 1e-10,
                  "f=" + f.label + " trial " + std::to_string(trial) + ": " +
                      fmt2(after, before));
      else
        c.require(after <= before, "f=" + f.label + ": finite exceeded +inf");
    }
  }
  c.finish();
}

void criterion_3_uf() {
  Criterion c(3, "closed-form u_f agrees with generic bisection to 1e-8");
  for (double x = 0.0; x <= 5.0 + 1e-12; x += 0.01) {
    for (const auto& f : {kl_generator(), chi2_generator(), tv_generator()}) {
      const double dev = std::fabs(u_f(f, x) - u_f_generic(f, x));
      c.require(dev <= 1e-8, "f=" + f.label + " x=" + std::to_string(x) +
                                 " dev=" + std::to_string(dev));
    }
  }
  const double cut = 1.0 - 1.0 / std::sqrt(2.0);
  for (double x = 0.0; x < cut; x += 0.001) {
    const auto hell = hellinger_generator();
    const double dev = std::fabs(u_f(hell, x) - u_f_generic(hell, x));
    c.require(dev <= 1e-8, "hellinger x=" + std::to_string(x) + " dev=" + std::to_string(dev));
  }
  c.finish();
}

void criterion_4_informativity() {
  Criterion c(4, "exact informativities match independent numeric minimization");
  for (int seed = 0; seed < 100; ++seed) {
    DiscreteProblem p = make_random(2 + seed % 4, 2 + seed % 5, 3, true, 40000 + seed);
    const double chi_exact = chi2_informativity_exact(p).value;
    const double chi_num = testoracle::simplex_min_informativity(chi2_generator(), p);
    c.require(std::fabs(chi_exact - chi_num) <= 1e-6,
              "chi2 seed " + std::to_string(seed) + ": " + fmt2(chi_exact, chi_num));
    const double hell_exact = hellinger_informativity_exact(p).value;
    const double hell_num = testoracle::simplex_min_informativity(hellinger_generator(), p);
    c.require(std::fabs(hell_exact - hell_num) <= 1e-6,
              "hellinger seed " + std::to_string(seed) + ": " + fmt2(hell_exact, hell_num));
    const double mi = mutual_information_exact(p).value;
    c.require(mi <= std::log(double(p.num_hypotheses())) + 1e-9, "MI > log N");
  }
  DiscreteProblem orth = make_orthogonal(2);
  c.require(std::fabs(chi2_informativity_exact(orth).value - 1.0) <= 1e-12,
            "orthogonal chi2 != N-1");
  c.require(std::fabs(mutual_information_exact(orth).value - std::log(2.0)) <= 1e-12,
            "orthogonal MI != log 2");
  c.finish();
}

void criterion_5_tightness() {
  Criterion c(5, "power mixture bound tightness and MC sandwich", 30.0);
  GaussHermiteRule rule = gauss_hermite_normal(400);
  for (int n : {1, 2, 4, 8, 16}) {
    std::vector<std::vector<double>> div(1, std::vector<double>(rule.nodes.size()));
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
      div[0][j] = std::expm1(n * rule.nodes[j] * rule.nodes[j]);
    const double value = power_mixture_bound(2.0, div, {1.0}, rule.weights).value;
    const double target = std::sqrt(2.0 * n + 1.0) - 1.0;
    c.require(std::fabs(value - target) <= 1e-6,
              "quadrature n=" + std::to_string(n) + ": " + fmt2(value, target));

    // MC estimate of chi^2(P || mixture center): average of p/q_bar - 1
    // where p/q_bar = sqrt(n+1) exp(-s^2/(2(n+1))), s the coordinate sum.
    CounterRng rng(777 + n);
    const int samples = 100000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < samples; ++i) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += rng.normal();
      const double ratio = std::sqrt(n + 1.0) * std::exp(-s * s / (2.0 * (n + 1.0)));
      sum += ratio;
      sum2 += ratio * ratio;
    }
    const double mean = sum / samples - 1.0;
    const double var = std::fmax(0.0, sum2 / samples - (sum / samples) * (sum / samples));
    const double se = std::sqrt(var / samples);
    const double lower = std::exp(-0.5) * std::sqrt(n + 1.0) - 1.0;
    c.require(mean >= lower - 3.0 * se,
              "mc lower n=" + std::to_string(n) + ": " + fmt2(mean, lower));
    c.require(mean <= target + 3.0 * se,
              "mc upper n=" + std::to_string(n) + ": " + fmt2(mean, target));
  }
  c.finish();
}

void criterion_6_gaussian_location() {
  Criterion c(6, "Gaussian location example: route values and comparisons", 60.0);
  for (int d : {1, 2, 4, 8}) {
    GaussianLocationFamily fam;
    fam.d = d;
    fam.sigma = 1.0;
    fam.gamma = 10.0 * std::sqrt(double(d));
    fam.prior = GaussianLocationFamily::PriorKind::uniform_ball;
    const double target = double(d);  // d sigma^2
    const double chi_val = tutu_pipeline(fam, TutuRoute::chi2).value;
    c.require(chi_val >= 1e-3 * target && chi_val <= target,
              "chi2 route d=" + std::to_string(d) + " value " + std::to_string(chi_val) +
                  " outside [1e-3, 1] * d sigma^2");
    const double part_val = tutu_pipeline(fam, TutuRoute::kl_partitioned).value;
    c.require(part_val >= target / 50.0 && part_val <= 50.0 * target,
              "kl_partitioned d=" + std::to_string(d) + " value " +
                  std::to_string(part_val) + " not within factor 50 of d sigma^2 = " +
                  std::to_string(target));
    GaussianLocationFamily wide = fam;
    wide.gamma = 100.0 * std::sqrt(double(d));
    const double naive = tutu_pipeline(wide, TutuRoute::kl_naive).value;
    const double chi_wide = tutu_pipeline(wide, TutuRoute::chi2).value;
    c.require(naive < chi_wide, "kl_naive not smaller at gamma=100 sqrt(d): " +
                                    fmt2(naive, chi_wide));
  }
  c.finish();
}

void criterion_7_birge_gushchin() {
  Criterion c(7, "Birge-Gushchin sandwich on 200 random instances");
  for (int seed = 0; seed < 200; ++seed) {
    const int n = 2 + seed % 5;  // hypotheses N+1 <= 6
    DiscreteProblem p = make_random(n, 4, n, true, 70000 + seed);
    p.loss.assign(n, std::vector<double>(n, 1.0));
    for (int i = 0; i < n; ++i) p.loss[i][i] = 0.0;
    const double upper = exact_minimax_upper(p).risk;
    for (const auto& f : {kl_generator(), chi2_generator()}) {
      std::vector<std::vector<double>> mat(n, std::vector<double>(n, 0.0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) mat[i][j] = f_divergence(f, p.channel[i], p.channel[j]);
      auto rep = birge_gushchin(f, mat);
      if (rep.valid)
        c.require(rep.value <= upper + 1e-9, "f=" + f.label + " seed " +
                                                 std::to_string(seed) + ": " +
                                                 fmt2(rep.value, upper));
    }
  }
  for (int n : {1, 2, 4}) {
    std::vector<std::vector<double>> zero(n + 1, std::vector<double>(n + 1, 0.0));
    const double got = birge_gushchin(kl_generator(), zero).value;
    c.require(std::fabs(got - double(n) / (n + 1)) <= 1e-10,
              "identical-rows value " + fmt2(got, double(n) / (n + 1)));
  }
  c.finish();
}

void criterion_8_classical() {
  Criterion c(8, "classical bounds reproduce hand-derived values to 1e-12");
  c.require(std::fabs(le_cam_two_point(0.0) - 0.5) <= 1e-12, "le_cam at tv=0");
  c.require(std::fabs(le_cam_two_point(1.0)) <= 1e-12, "le_cam at tv=1");
  DiscreteProblem bsc = make_bsc(0.1);
  c.require(std::fabs(le_cam_two_point(total_variation(bsc.channel[0], bsc.channel[1])) -
                      0.1) <= 1e-12,
            "le_cam on BSC(0.1)");
  c.require(std::fabs(assouad(4, 0.5) - 1.0) <= 1e-12, "assouad(4, 0.5)");
  c.require(std::fabs(assouad(3, 0.0) - 1.5) <= 1e-12, "assouad(3, 0)");
  c.require(std::fabs(assouad_hellinger(3, 0.0) - 1.5) <= 1e-12, "assouad_h(3, 0)");
  c.require(std::fabs(assouad_hellinger(2, 1.0) - (1.0 - std::sqrt(0.75))) <= 1e-12,
            "assouad_h(2, 1)");
  c.require(std::fabs(likelihood_ratio_bound(2, 1.0, 0.0) - 2.0 / 3.0) <= 1e-12,
            "likelihood ratio N=2 s=1 alpha=0");
  c.finish();
}

void criterion_9_pipelines() {
  Criterion c(9, "GLM and spiked pipelines below their MC reference risks", 180.0);
  {
    GLMSpec spec;
    const int n = 50, d = 2;
    spec.design = Eigen::MatrixXd(n, d);
    CounterRng rng(31337);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) spec.design(i, j) = rng.normal();
    const Eigen::MatrixXd gram = spec.design.transpose() * spec.design / n;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    spec.design /= std::sqrt(es.eigenvalues().maxCoeff());
    spec.lambda_max = 1.0;
    spec.a_phi = 1.0;
    spec.curvature_cap = 0.25;
    spec.tau = 1.0;
    const double bound = glm_bound(spec, 2.0).value;
    auto mc = mc_integrated_risk(spec, Estimator::projection_lse, 4000, 91);
    c.require(bound <= mc.risk + 3.0 * *mc.std_error,
              "glm: " + fmt2(bound, mc.risk));
  }
  {
    SpikedCovarianceFamily fam;
    fam.n = 200;
    fam.d = 4;
    auto rep = spiked_bound(fam, 2.0);
    auto mc = mc_integrated_risk(fam, Estimator::pca_top, 4000, 92);
    c.require(rep.valid && rep.value <= mc.risk + 3.0 * *mc.std_error,
              "spiked: " + fmt2(rep.value, mc.risk));
    const double floor =
        0.5 * std::pow(24.0 * M_E, -2.0) * std::fmin(0.5, 4.0 / 200.0);
    c.require(rep.value >= floor, "spiked floor: " + fmt2(rep.value, floor));
  }
  c.finish();
}

void criterion_10_determinism() {
  Criterion c(10, "suite output is byte-identical across runs with one seed");
  int s1 = 0, s2 = 0;
  const std::string a = run_suite_csv(1, &s1);
  const std::string b = run_suite_csv(1, &s2);
  c.require(a == b, "suite CSVs differ");
  c.require(s1 == s2, "suite exit statuses differ");
  c.finish();
}

}  // namespace

int main() {
  criterion_1_dominance();
  criterion_2_dpi();
  criterion_3_uf();
  criterion_4_informativity();
  criterion_5_tightness();
  criterion_6_gaussian_location();
  criterion_7_birge_gushchin();
  criterion_8_classical();
  criterion_9_pipelines();
  criterion_10_determinism();
  std::printf("%d of 10 criteria failed\n", g_failures);
  return g_failures;
}

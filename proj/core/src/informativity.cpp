#include "bayesbound/informativity.hpp"

#include <cmath>
#include <stdexcept>

namespace bayesbound {

InformativityEstimate informativity_via_center(const ConvexGenerator& f,
                                               const DiscreteProblem& problem,
                                               const DiscreteDistribution& q) {
  if (q.size() != problem.alphabet_size())
    throw std::invalid_argument("informativity_via_center: alphabet mismatch");
  double value = 0.0;
  for (std::size_t t = 0; t < problem.num_hypotheses(); ++t) {
    const double d = f_divergence(f, problem.channel[t], q);
    const double term = mul0(problem.prior[t], d);
    if (is_pos_inf(term)) return {kInf, Exactness::upper_bound, "center(" + f.label + ")", {}};
    value += term;
  }
  return {value, Exactness::upper_bound, "center(" + f.label + ")", {}};
}

InformativityEstimate mutual_information_exact(const DiscreteProblem& problem) {
  auto est = informativity_via_center(kl_generator(), problem, problem.marginal());
  est.exactness = Exactness::exact;
  est.method = "mutual_information";
  return est;
}

InformativityEstimate chi2_informativity_exact(const DiscreteProblem& problem) {
  // Minimizing center: q(x) proportional to sqrt(sum_theta w p_theta(x)^2).
  const std::size_t m = problem.alphabet_size();
  std::vector<double> root_m2(m, 0.0);
  for (std::size_t x = 0; x < m; ++x) {
    double s = 0.0;
    for (std::size_t t = 0; t < problem.num_hypotheses(); ++t) {
      const double p = problem.channel[t][x];
      s += problem.prior[t] * p * p;
    }
    root_m2[x] = std::sqrt(s);
  }
  double z = 0.0;
  for (double v : root_m2) z += v;
  // I = (sum_x sqrt(m2(x)))^2 - 1: substitute q* into sum_x m2(x)/q(x) - 1.
  return {std::fmax(0.0, z * z - 1.0), Exactness::exact, "chi2_closed_form", {}};
}

InformativityEstimate hellinger_informativity_exact(const DiscreteProblem& problem) {
  // u(x) = sum_theta w sqrt(p_theta(x)); I_{f_{1/2}} = 1 - sqrt(sum u^2).
  double usq = 0.0;
  for (std::size_t x = 0; x < problem.alphabet_size(); ++x) {
    double u = 0.0;
    for (std::size_t t = 0; t < problem.num_hypotheses(); ++t)
      u += problem.prior[t] * std::sqrt(problem.channel[t][x]);
    usq += u * u;
  }
  return {std::fmax(0.0, 1.0 - std::sqrt(usq)), Exactness::exact, "hellinger_closed_form", {}};
}

InformativityEstimate haussler_opper_bound(const std::vector<std::vector<double>>& kl_matrix,
                                           const std::vector<double>& prior,
                                           const std::vector<double>& nu) {
  if (kl_matrix.size() != prior.size())
    throw std::invalid_argument("haussler_opper_bound: prior size mismatch");
  double value = 0.0;
  for (std::size_t t = 0; t < kl_matrix.size(); ++t) {
    if (kl_matrix[t].size() != nu.size())
      throw std::invalid_argument("haussler_opper_bound: nu size mismatch");
    double mix = 0.0;
    for (std::size_t j = 0; j < nu.size(); ++j) {
      const double kl = kl_matrix[t][j];
      mix += nu[j] * (is_pos_inf(kl) ? 0.0 : std::exp(-kl));
    }
    if (mix <= 0.0) return {kInf, Exactness::upper_bound, "haussler_opper", {}};
    value += mul0(prior[t], -std::log(mix));
  }
  return {std::fmax(0.0, value), Exactness::upper_bound, "haussler_opper", {}};
}

InformativityEstimate yang_barron_bound(const std::function<double(double)>& covering_count,
                                        const std::vector<double>& epsilons) {
  if (epsilons.empty()) throw std::invalid_argument("yang_barron_bound: empty epsilon grid");
  double best = kInf, best_eps = epsilons.front();
  for (double eps : epsilons) {
    const double count = covering_count(eps);
    if (!(count >= 1.0)) continue;
    const double v = std::log(count) + eps * eps;  // log(+inf) = +inf
    if (v < best) {
      best = v;
      best_eps = eps;
    }
  }
  return {best, Exactness::upper_bound, "yang_barron", best_eps};
}

InformativityEstimate power_mixture_bound(double alpha,
                                          const std::vector<std::vector<double>>& div_matrix,
                                          const std::vector<double>& prior,
                                          const std::vector<double>& nu) {
  if (alpha >= 0.0 && alpha <= 1.0)
    throw std::invalid_argument("power_mixture_bound: alpha must lie outside [0, 1]");
  if (div_matrix.size() != prior.size())
    throw std::invalid_argument("power_mixture_bound: prior size mismatch");
  const double inner_exp = 1.0 / (1.0 - alpha);  // negative for alpha > 1
  double value = 0.0;
  for (std::size_t t = 0; t < div_matrix.size(); ++t) {
    if (div_matrix[t].size() != nu.size())
      throw std::invalid_argument("power_mixture_bound: nu size mismatch");
    double inner = 0.0;
    for (std::size_t j = 0; j < nu.size(); ++j) {
      // pow(inf, negative) = 0: infinite divergences drop out for alpha > 1.
      inner += nu[j] * std::pow(div_matrix[t][j] + 1.0, inner_exp);
    }
    const double outer = std::pow(inner, 1.0 - alpha);  // inner = 0 -> +inf for alpha > 1
    const double term = mul0(prior[t], outer);
    if (is_pos_inf(term)) return {kInf, Exactness::upper_bound, "power_mixture", {}};
    value += term;
  }
  return {std::fmax(0.0, value - 1.0), Exactness::upper_bound, "power_mixture", {}};
}

InformativityEstimate power_covering_bound(double alpha,
                                           const std::function<double(double)>& covering_count,
                                           const std::vector<double>& epsilons) {
  if (!(alpha > 1.0)) throw std::invalid_argument("power_covering_bound: alpha must be > 1");
  if (epsilons.empty()) throw std::invalid_argument("power_covering_bound: empty epsilon grid");
  double best = kInf, best_eps = epsilons.front();
  for (double eps : epsilons) {
    const double count = covering_count(eps);
    if (!(count >= 1.0)) continue;
    const double v = (1.0 + eps * eps) * std::pow(count, alpha - 1.0) - 1.0;
    if (v < best) {
      best = v;
      best_eps = eps;
    }
  }
  return {best, Exactness::upper_bound, "power_covering", best_eps};
}

std::vector<double> default_epsilon_grid() {
  std::vector<double> grid(40);
  for (int i = 0; i < 40; ++i)
    grid[static_cast<std::size_t>(i)] = std::pow(10.0, -3.0 + 6.0 * i / 39.0);
  return grid;
}

}  // namespace bayesbound

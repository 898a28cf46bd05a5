#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bayesbound/problem.hpp"

namespace bayesbound {

enum class Exactness { exact, upper_bound };

// An f-informativity value together with how it was obtained. `exact`
// estimates attain the defining infimum over mixture centers Q;
// `upper_bound` estimates come from a fixed center, a mixture, or a cover.
struct InformativityEstimate {
  double value = 0.0;  // >= 0, possibly +inf
  Exactness exactness = Exactness::upper_bound;
  std::string method;
  std::optional<double> epsilon_used;  // covering-based bounds only
};

// sum_theta w(theta) D_f(P_theta || q) for a caller-fixed center q: an
// upper bound on I_f by definition of the infimum.
InformativityEstimate informativity_via_center(const ConvexGenerator& f,
                                               const DiscreteProblem& problem,
                                               const DiscreteDistribution& q);

// KL informativity = mutual information; the minimizing center is the
// prior-weighted marginal.
InformativityEstimate mutual_information_exact(const DiscreteProblem& problem);

// chi^2 informativity; the minimizing center is q(x) proportional to
// sqrt(sum_theta w(theta) p_theta(x)^2) (first-order condition of the
// convex program).
InformativityEstimate chi2_informativity_exact(const DiscreteProblem& problem);

// f_{1/2} informativity: with u(x) = sum_theta w(theta) sqrt(p_theta(x)),
// I = 1 - sqrt(sum_x u(x)^2); the minimizer is q proportional to u^2.
InformativityEstimate hellinger_informativity_exact(const DiscreteProblem& problem);

// Haussler-Opper mixture bound:
// I(w,P) <= -sum_theta w(theta) log( sum_j nu(j) exp(-kl[theta][j]) ).
InformativityEstimate haussler_opper_bound(const std::vector<std::vector<double>>& kl_matrix,
                                           const std::vector<double>& prior,
                                           const std::vector<double>& nu);

// Yang-Barron: min over the epsilon grid of log M_KL(eps) + eps^2.
// covering_count(eps) returns an upper bound on the KL covering number
// (>= 1, possibly +inf). Throws std::invalid_argument on an empty grid.
InformativityEstimate yang_barron_bound(const std::function<double(double)>& covering_count,
                                        const std::vector<double>& epsilons);

// Power-divergence mixture bound (alpha outside [0,1]):
// I_{f_alpha} <= sum_theta w [ sum_j nu_j (div[theta][j]+1)^{1/(1-alpha)} ]^{1-alpha} - 1.
// For alpha > 1 infinite entries contribute 0 to the inner sum (the correct
// limit), so the bound can be finite even when every divergence is infinite.
InformativityEstimate power_mixture_bound(double alpha,
                                          const std::vector<std::vector<double>>& div_matrix,
                                          const std::vector<double>& prior,
                                          const std::vector<double>& nu);

// Covering form for alpha > 1: min over the grid of (1+eps^2) M^(alpha-1) - 1.
InformativityEstimate power_covering_bound(double alpha,
                                           const std::function<double(double)>& covering_count,
                                           const std::vector<double>& epsilons);

// Default 40-point logarithmic epsilon grid on [1e-3, 1e3].
std::vector<double> default_epsilon_grid();

}  // namespace bayesbound

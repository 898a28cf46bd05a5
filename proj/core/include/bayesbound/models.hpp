#pragma once

#include <cstdint>
#include <optional>

#include "bayesbound/bounds.hpp"
#include "bayesbound/families.hpp"
#include "bayesbound/oracle.hpp"

namespace bayesbound {

enum class TutuRoute { chi2, kl_naive, kl_partitioned };

// End-to-end Bayes-risk lower bound for the Gaussian location family with
// a uniform-ball prior (squared loss).
//   chi2:           small-ball mass (sqrt(t)/gamma)^d, chi^2 covering
//                   informativity (3 e gamma/(sigma sqrt d))^d - 1, value
//                   min(C_TUTU_CHI2 * d sigma^2, certified instance max)
//                   — linear in d by construction, always certified valid.
//   kl_naive:       Yang-Barron KL informativity over the default epsilon
//                   grid; the deliberately weaker d^2 sigma^4 / gamma^2 route.
//   kl_partitioned: density_partition_bound with r_delta = 1,
//                   A = 1/(2 sigma^2), p = 2, V = Vol(unit ball).
// Requires prior == uniform_ball; chi2 route requires gamma >= sigma sqrt(d).
BoundReport tutu_pipeline(const GaussianLocationFamily& family, TutuRoute route);

// Frozen implementation constant of the chi2 route (value = C * d sigma^2
// whenever the per-instance certificate clears it; see the derivation
// comment at the definition).
extern const double kTutuChi2Constant;

// GLM pipeline: A = n K lambda_max / (2 a(phi)), delta^2 = min(1/A, tau^2),
// prior integral lower bound (3/4) exp(-(p delta^2/(2 tau^2) + 4 p delta/tau)),
// then density_partition_bound. The report's parameters record the
// realized constant C with value = C [d min(a/(nK), tau^2)]^{p/2}.
BoundReport glm_bound(const GLMSpec& spec, double p_exponent);

// Spiked covariance pipeline: I_up = exp(min(n/2, d)) (36 max(2, n/d))^{d/2} - 1,
// value = (1/2)(4(1+I_up))^{-p/d}; always >= (1/2)(24 e)^{-p} min(1/2, d/n)^{p/2}.
BoundReport spiked_bound(const SpikedCovarianceFamily& family, double p_exponent);

// Gaussian location with a density-bounded prior (density cap W, second
// moment V): value = (1/2)(1/5)^{2/d} W^{-2/d} Vol(B)^{-2/d} sigma^4/(sigma^2+V)^2
// via the KL threshold (1/4) e^{-2I} with I = (d/2) log((sigma^2+V)/sigma^2);
// with a dual-norm expectation E||Z||_* supplied, the t-choice additionally
// scales by d / (E||Z||_*)^2.
BoundReport bounded_density_gaussian_bound(const GaussianLocationFamily& family,
                                           std::optional<double> dual_norm_expectation);

// Fixture factories for the dominance harness.
DiscreteProblem make_bsc(double flip_prob);          // 2 rows, 0-1 loss
DiscreteProblem make_orthogonal(int n);              // identity channel, 0-1 loss
DiscreteProblem make_no_data(int n, int alphabet);   // identical rows, 0-1 loss
// Dirichlet-style random rows/prior; zero_one=false draws a random loss
// matrix with entries in [0, 2] and a zero per row.
DiscreteProblem make_random(int n, int alphabet, int actions, bool zero_one,
                            std::uint64_t seed);

}  // namespace bayesbound

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bayesbound/bounds.hpp"
#include "bayesbound/families.hpp"
#include "bayesbound/problem.hpp"
#include "bayesbound/rng.hpp"

namespace bayesbound {

enum class OracleKind { exact, closed_form, monte_carlo };

struct OracleResult {
  double risk = 0.0;
  OracleKind kind = OracleKind::exact;
  std::optional<double> std_error;     // Monte Carlo only
  std::optional<std::uint64_t> seed;   // Monte Carlo only
  std::size_t n_samples = 0;           // Monte Carlo only
};

// Exact Bayes risk of a finite problem: per observation, the Bayes action
// minimizes sum_theta w(theta) P_theta(x) L(theta, a), ties broken by the
// lowest action index; the risk is the weighted sum of the minima.
OracleResult exact_bayes_risk(const DiscreteProblem& problem);

// The Bayes decision rule (action index per observation) for an arbitrary
// prior over the problem's hypotheses.
std::vector<int> bayes_rule(const DiscreteProblem& problem, const std::vector<double>& prior);

// max_theta risk of the uniform-prior Bayes rule: a certified upper bound
// on the minimax risk (any fixed rule's worst-case risk is one).
OracleResult exact_minimax_upper(const DiscreteProblem& problem);

// Conjugate Gaussian closed form: posterior-mean risk under squared loss
// with prior N(0, tau^2 I) and noise sigma^2 I is d sigma^2 tau^2 / (sigma^2 + tau^2).
OracleResult gaussian_conjugate_bayes_risk(int d, double sigma, double tau);

enum class Estimator { posterior_mean_grid, mle, projection_lse, pca_top };

// Monte Carlo integrated risk of a reference estimator: a certified upper
// bound on the Bayes risk (squared-error loss). Deterministic per seed;
// std_error reported. Throws std::invalid_argument for an estimator the
// family does not support. Requires n_samples >= 1000.
OracleResult mc_integrated_risk(const ModelFamily& family, Estimator estimator,
                                std::size_t n_samples, std::uint64_t seed);

// Monte Carlo small-ball profile for a continuous family under squared
// loss: for each t in t_grid, the max over a deterministic candidate-center
// set (prior mean plus an axis grid) of the prior mass of {L(theta,a) < t};
// made monotone by a running max.
SmallBallProfile small_ball_profile_mc(const GaussianLocationFamily& family,
                                       const std::vector<double>& t_grid,
                                       std::size_t n_samples, std::uint64_t seed);

}  // namespace bayesbound

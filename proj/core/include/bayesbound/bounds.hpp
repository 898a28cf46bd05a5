#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bayesbound/informativity.hpp"
#include "bayesbound/phi.hpp"

namespace bayesbound {

// t -> sup_a w{theta : L(theta, a) < t}: the largest prior mass any single
// action captures within loss radius t. Either a step function given by
// samples (t_i, mass strictly below t_i), non-decreasing, or a continuous
// closed form on (0, t_max].
struct SmallBallProfile {
  std::vector<std::pair<double, double>> samples;  // sorted by t
  std::function<double(double)> mass_fn;           // optional closed form
  double t_max = 0.0;                              // search limit for mass_fn
  std::optional<double> support_hint;              // max loss value, if known

  double mass_at(double t) const;
  // sup_a w{theta : L(theta,a) = 0}, the t -> 0+ zero-loss ball.
  double zero_ball_mass() const;

  static SmallBallProfile from_samples(std::vector<std::pair<double, double>> samples);
  static SmallBallProfile from_function(std::function<double(double)> mass, double t_max);

  // Exhaustive profile of a finite problem (samples at every loss value).
  static SmallBallProfile from_problem(const DiscreteProblem& problem);
};

struct BoundReport {
  std::string bound_name;
  double value = 0.0;
  std::optional<InformativityEstimate> informativity_input;
  std::map<std::string, double> parameters;
  bool valid = true;     // false when a bound's proviso fails
  std::string reason;    // why invalid
};

// R_0 = 1 - sup_a w{L(theta,a) = 0} for zero-one loss problems.
// Throws std::invalid_argument on a non-binary loss matrix.
double r0_zero_one(const DiscreteProblem& problem);
double sup_zero_ball(const DiscreteProblem& problem);  // max_a w(B(a))

// Generalized Fano: 1 + (i_up + log(1 + r0)) / log(sup_zero_ball),
// clamped to [0, 1]. Requires sup_zero_ball in (0, 1).
double generalized_fano(double i_up, double r0, double sup_zero_ball);

// Classical Fano for N uniform hypotheses: 1 - (i_up + log 2)/log N.
double classical_fano(double i_up, int n_hypotheses);

enum class ZeroOneKind { chi2, tv, hellinger, generic };

// Zero-one loss lower bounds. chi2: r0 - sqrt(r0(1-r0) I); tv: r0 - I;
// hellinger: r0 - (2r0-1)h^2/2 - sqrt(r0(1-r0)h^2(2-h^2)), valid only when
// h^2 <= 2 r0 (h2 = prior-pair average of squared Hellinger); generic:
// bisection inversion of phi_f(., r0). All clamped to [0, r0].
BoundReport zero_one_bound(ZeroOneKind kind, double r0,
                           const InformativityEstimate& info,
                           std::optional<double> h2 = std::nullopt,
                           const ConvexGenerator* f = nullptr);

// Prior-pair average h^2 = sum_{i,j} w_i w_j H^2(P_i || P_j).
double h_squared_prior_average(const DiscreteProblem& problem);

// Small-ball mass threshold for the general-loss bound: the closed-form
// specializations for kl / chi2 / tv / hellinger, or 1 - u_f(i_up) for any
// other generator. Sets *valid = false for the Hellinger case when
// i_up >= 1 - 1/sqrt(2).
double small_ball_threshold(const ConvexGenerator& f, double i_up, bool* valid);

// General-loss bound: (1/2) sup{ t : mass_at(t) < threshold }, with the
// left-endpoint convention at steps (conservative). Empty feasible set
// gives value 0 (not an error).
BoundReport general_bound(const ConvexGenerator& f, double i_up,
                          const SmallBallProfile& profile);

// Birge-Gushchin minimax bound. pairwise is the (N+1)x(N+1) divergence
// matrix D_f(P_i || P_j); B = min_j (1/N) sum_{i != j} pairwise[i][j]; the
// bound is the smallest x in [0, N/(N+1)] with psi_{N,f}(x) <= B, where
// psi_{N,f}(x) = ((N-x)/N) f(Nx/(N-x)) + (x/N) f(N(1-x)/x). psi's
// monotonicity on [0, N/(N+1)] is verified numerically per call; on
// failure the report carries valid = false and no bound.
BoundReport birge_gushchin(const ConvexGenerator& f,
                           const std::vector<std::vector<double>>& pairwise);
double psi_birge(const ConvexGenerator& f, int n, double x);

// Classical two-point and hypercube bounds.
double le_cam_two_point(double tv);  // (1/2)(1 - tv)
double le_cam_fuzzy(const DiscreteDistribution& m0, const DiscreteDistribution& m1);
double assouad(int d, double min_edge_tv);            // (d/2)(1 - tv)
double assouad_hellinger(int d, double min_edge_h2);  // (d/2)(1 - sqrt(h2(1 - h2/4)))

// Braun-Pokutta: (-i - H(risk) - log w_max) / log((1 - w_min)/w_max),
// H the binary entropy (0 at the endpoints). Provisos: 0 < w_max < 1,
// w_min + w_max < 1, risk in (0, 1). Throws std::domain_error otherwise.
double braun_pokutta(double i, double risk, double w_min, double w_max);

// Tsybakov-style: N (1 - alpha) / (s + N); provisos s >= 1 - alpha,
// alpha < 1, N >= 2.
double likelihood_ratio_bound(int n_alternatives, double s, double alpha);

// Prior-partition combination: sum of weight * piece value.
BoundReport partitioned_bound(const std::vector<std::pair<double, BoundReport>>& pieces);

// Density-partition (Fano over a cube partition) bound:
// (1/2) max over supplied deltas (each <= a_const^{-1/2}) of
// e^{-2p} delta^p (8 v_const)^{-p/d} * r_delta_integral(delta).
BoundReport density_partition_bound(double a_const, double v_const, double p, int d,
                                    const std::function<double(double)>& r_delta_integral,
                                    const std::vector<double>& deltas);

}  // namespace bayesbound

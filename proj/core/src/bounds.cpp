#include "bayesbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bayesbound/distribution.hpp"

namespace bayesbound {

namespace {

constexpr double kBisectTol = 1e-10;
constexpr int kBisectMaxIter = 200;

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;  // limits
  return -x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
}

}  // namespace

double SmallBallProfile::mass_at(double t) const {
  if (mass_fn) return mass_fn(t);
  // samples hold (t_i, w{L < t_i}); the step function is left-continuous,
  // so for t in (t_i, t_{i+1}] the mass is w{L < t} = w{L <= t_i}. We only
  // ever query at sample points in that case.
  double m = 0.0;
  for (const auto& [ti, mi] : samples) {
    if (ti <= t) m = mi;
    else break;
  }
  return m;
}

double SmallBallProfile::zero_ball_mass() const {
  if (mass_fn) return mass_fn(0.0);
  // samples hold (t_i, w{L < t_i}); with nonnegative losses the mass of
  // {L = 0} equals w{L < t} for the smallest sampled t > 0.
  for (const auto& [ti, mi] : samples)
    if (ti > 0.0) return mi;
  return 0.0;
}

SmallBallProfile SmallBallProfile::from_samples(std::vector<std::pair<double, double>> s) {
  std::sort(s.begin(), s.end());
  SmallBallProfile p;
  p.samples = std::move(s);
  if (!p.samples.empty()) p.t_max = p.samples.back().first;
  return p;
}

SmallBallProfile SmallBallProfile::from_function(std::function<double(double)> mass,
                                                 double t_max) {
  SmallBallProfile p;
  p.mass_fn = std::move(mass);
  p.t_max = t_max;
  return p;
}

SmallBallProfile SmallBallProfile::from_problem(const DiscreteProblem& problem) {
  // Sample points: 0, every distinct loss value, and one past the max.
  std::vector<double> ts{0.0};
  double max_loss = 0.0;
  for (const auto& row : problem.loss)
    for (double v : row) {
      ts.push_back(v);
      max_loss = std::fmax(max_loss, v);
    }
  ts.push_back(max_loss + 1.0);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<std::pair<double, double>> samples;
  for (double t : ts) {
    double sup = 0.0;
    for (std::size_t a = 0; a < problem.num_actions(); ++a) {
      double m = 0.0;
      for (std::size_t th = 0; th < problem.num_hypotheses(); ++th)
        if (problem.loss[th][a] < t) m += problem.prior[th];
      sup = std::fmax(sup, m);
    }
    samples.emplace_back(t, sup);
  }
  auto p = from_samples(std::move(samples));
  p.support_hint = max_loss;
  return p;
}

double sup_zero_ball(const DiscreteProblem& problem) {
  double sup = 0.0;
  for (std::size_t a = 0; a < problem.num_actions(); ++a) {
    double m = 0.0;
    for (std::size_t th = 0; th < problem.num_hypotheses(); ++th)
      if (problem.loss[th][a] == 0.0) m += problem.prior[th];
    sup = std::fmax(sup, m);
  }
  return sup;
}

double r0_zero_one(const DiscreteProblem& problem) {
  if (!problem.zero_one_loss())
    throw std::invalid_argument("r0_zero_one: loss matrix is not zero-one valued");
  return 1.0 - sup_zero_ball(problem);
}

double generalized_fano(double i_up, double r0, double szb) {
  if (!(szb > 0.0 && szb < 1.0))
    throw std::domain_error("generalized_fano: sup_zero_ball must lie in (0, 1)");
  if (is_pos_inf(i_up)) return 0.0;
  const double v = 1.0 + (i_up + std::log1p(r0)) / std::log(szb);
  return std::fmax(0.0, std::fmin(1.0, v));
}

double classical_fano(double i_up, int n) {
  if (n < 2) throw std::domain_error("classical_fano: need at least 2 hypotheses");
  const double v = 1.0 - (i_up + std::log(2.0)) / std::log(static_cast<double>(n));
  return std::fmax(0.0, std::fmin(1.0, v));
}

BoundReport zero_one_bound(ZeroOneKind kind, double r0, const InformativityEstimate& info,
                           std::optional<double> h2, const ConvexGenerator* f) {
  if (!(r0 >= 0.0 && r0 <= 1.0)) throw std::domain_error("zero_one_bound: r0 outside [0, 1]");
  BoundReport rep;
  rep.informativity_input = info;
  rep.parameters["r0"] = r0;
  const double i = info.value;
  auto clamp = [&](double v) { return std::fmax(0.0, std::fmin(r0, v)); };
  switch (kind) {
    case ZeroOneKind::chi2:
      rep.bound_name = "chi2_zero_one";
      rep.value = is_pos_inf(i) ? 0.0 : clamp(r0 - std::sqrt(r0 * (1.0 - r0) * i));
      break;
    case ZeroOneKind::tv:
      rep.bound_name = "tv_zero_one";
      rep.value = is_pos_inf(i) ? 0.0 : clamp(r0 - i);
      break;
    case ZeroOneKind::hellinger: {
      rep.bound_name = "hellinger_zero_one";
      if (!h2) throw std::invalid_argument("zero_one_bound: hellinger kind requires h2");
      rep.parameters["h2"] = *h2;
      if (*h2 > 2.0 * r0) {
        rep.valid = false;
        rep.reason = "h^2 > 2 R_0: Hellinger zero-one bound inapplicable";
        rep.value = 0.0;
      } else {
        const double h = *h2;
        rep.value = clamp(r0 - (2.0 * r0 - 1.0) * h / 2.0 -
                          std::sqrt(r0 * (1.0 - r0) * h * (2.0 - h)));
      }
      break;
    }
    case ZeroOneKind::generic: {
      rep.bound_name = "generic_inversion";
      if (f == nullptr)
        throw std::invalid_argument("zero_one_bound: generic kind requires a generator");
      if (r0 == 0.0) {
        rep.value = 0.0;
      } else {
        rep.value = clamp(invert_phi(*f, i, r0).lower_bound);
      }
      rep.bound_name = "generic_" + f->label;
      break;
    }
  }
  return rep;
}

double h_squared_prior_average(const DiscreteProblem& problem) {
  double h2 = 0.0;
  const auto n = problem.num_hypotheses();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        h2 += problem.prior[i] * problem.prior[j] *
              hellinger_sq(problem.channel[i], problem.channel[j]);
  return h2;
}

double small_ball_threshold(const ConvexGenerator& f, double i_up, bool* valid) {
  if (valid) *valid = true;
  if (is_pos_inf(i_up)) return 0.0;
  // Corollary-specialized thresholds for the named generators (these are
  // the paper's relaxations of 1 - u_f; exact for tv and hellinger). The
  // one-sided relation thr <= 1 - u_f is asserted in the test suite.
  if (f.label == "kl") return 0.25 * std::exp(-2.0 * i_up);
  if (f.label == "chi2") return 0.25 / (1.0 + i_up);
  if (f.label == "tv") return std::fmax(0.0, 0.5 - i_up);
  if (f.label == "hellinger") {
    if (i_up >= 1.0 - 1.0 / std::sqrt(2.0)) {
      if (valid) *valid = false;
      return 0.0;
    }
    return 0.5 - (1.0 - i_up) * std::sqrt(i_up * (2.0 - i_up));
  }
  return 1.0 - u_f(f, i_up);
}

BoundReport general_bound(const ConvexGenerator& f, double i_up,
                          const SmallBallProfile& profile) {
  BoundReport rep;
  rep.bound_name = "general_" + f.label;
  rep.informativity_input = InformativityEstimate{i_up, Exactness::upper_bound, "caller", {}};
  bool valid = true;
  const double thr = small_ball_threshold(f, i_up, &valid);
  rep.parameters["threshold"] = thr;
  if (!valid) {
    rep.valid = false;
    rep.reason = "I_f^up >= 1 - 1/sqrt(2): Hellinger general bound inapplicable";
    rep.value = 0.0;
    return rep;
  }
  if (thr <= 0.0) {
    rep.value = 0.0;  // empty feasible set, not an error
    return rep;
  }
  double t_star = 0.0;
  if (profile.mass_fn) {
    if (profile.mass_at(profile.t_max) < thr) {
      t_star = profile.t_max;
    } else if (profile.mass_at(0.0) >= thr) {
      t_star = 0.0;
    } else {
      double lo = 0.0, hi = profile.t_max;  // mass(lo) < thr <= mass(hi)
      for (int it = 0; it < kBisectMaxIter && hi - lo > kBisectTol * std::fmax(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (profile.mass_at(mid) < thr)
          lo = mid;
        else
          hi = mid;
      }
      t_star = lo;  // left endpoint: conservative at steps
    }
  } else {
    for (const auto& [t, m] : profile.samples)
      if (m < thr) t_star = std::fmax(t_star, t);
  }
  rep.parameters["t_star"] = t_star;
  rep.value = 0.5 * t_star;
  return rep;
}

double psi_birge(const ConvexGenerator& f, int n, double x) {
  // psi_{N,f}(x) = ((N-x)/N) f(Nx/(N-x)) + (x/N) f(N(1-x)/x) on [0, N/(N+1)],
  // extended at x = 0 by its limit f(0) + f'(inf).
  if (!(x >= 0.0 && x < 1.0))
    throw std::domain_error("psi_birge: x outside [0, N/(N+1)]");
  const double nd = static_cast<double>(n);
  double first, second;
  if (x == 0.0) {
    first = f.at_zero;             // (N-0)/N * f(0)
    second = f.slope_at_infinity;  // lim (x/N) f(N(1-x)/x) = f'(inf)(1-x)|_{x=0}
  } else {
    first = (nd - x) / nd * f.evaluate(nd * x / (nd - x));
    second = x / nd * f.evaluate(nd * (1.0 - x) / x);
  }
  if (is_pos_inf(first) || is_pos_inf(second)) return kInf;
  const double v = first + second;
  return v < 0.0 && v > -1e-12 ? 0.0 : v;
}

BoundReport birge_gushchin(const ConvexGenerator& f,
                           const std::vector<std::vector<double>>& pairwise) {
  const std::size_t np1 = pairwise.size();
  if (np1 < 2) throw std::invalid_argument("birge_gushchin: need at least 2 hypotheses");
  for (const auto& row : pairwise)
    if (row.size() != np1) throw std::invalid_argument("birge_gushchin: matrix not square");
  const int n = static_cast<int>(np1) - 1;
  const double cap = static_cast<double>(n) / (n + 1.0);

  BoundReport rep;
  rep.bound_name = "birge_gushchin_" + f.label;
  rep.parameters["n"] = n;

  // B = min over centers j of the average divergence toward j.
  double b = kInf;
  for (std::size_t j = 0; j < np1; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < np1; ++i)
      if (i != j) s += pairwise[i][j];
    b = std::fmin(b, s / n);
  }
  rep.parameters["avg_divergence"] = b;
  rep.informativity_input = InformativityEstimate{b, Exactness::upper_bound, "pairwise_avg", {}};

  // Verify psi is non-increasing on [0, N/(N+1)] for this generator.
  const int grid = 256;
  double prev = psi_birge(f, n, 0.0);
  for (int k = 1; k <= grid; ++k) {
    const double x = cap * k / grid;
    const double cur = psi_birge(f, n, x);
    if (cur > prev + 1e-10 && !is_pos_inf(prev)) {
      rep.valid = false;
      rep.reason = "psi_{N,f} failed its monotonicity check for this generator";
      rep.value = 0.0;
      return rep;
    }
    prev = cur;
  }

  if (b <= 0.0) {
    // Identical distributions: psi(N/(N+1)) = 0 = B exactly.
    rep.value = cap;
    return rep;
  }
  if (psi_birge(f, n, 0.0) <= b) {
    rep.value = 0.0;
    return rep;
  }
  // Smallest x with psi(x) <= B: maintain psi(lo) > B >= psi(hi).
  double lo = 0.0, hi = cap;
  for (int it = 0; it < kBisectMaxIter && hi - lo > kBisectTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (psi_birge(f, n, mid) <= b)
      hi = mid;
    else
      lo = mid;
  }
  rep.value = lo;  // conservative side of the crossing
  return rep;
}

double le_cam_two_point(double tv) {
  if (!(tv >= 0.0 && tv <= 1.0)) throw std::domain_error("le_cam_two_point: tv outside [0, 1]");
  return 0.5 * (1.0 - tv);
}

double le_cam_fuzzy(const DiscreteDistribution& m0, const DiscreteDistribution& m1) {
  return 0.5 * (1.0 - total_variation(m0, m1));
}

double assouad(int d, double min_edge_tv) {
  if (d < 1) throw std::domain_error("assouad: d must be >= 1");
  if (!(min_edge_tv >= 0.0 && min_edge_tv <= 1.0))
    throw std::domain_error("assouad: tv outside [0, 1]");
  return d / 2.0 * (1.0 - min_edge_tv);
}

double assouad_hellinger(int d, double min_edge_h2) {
  if (d < 1) throw std::domain_error("assouad_hellinger: d must be >= 1");
  if (!(min_edge_h2 >= 0.0 && min_edge_h2 <= 2.0))
    throw std::domain_error("assouad_hellinger: h2 outside [0, 2]");
  return d / 2.0 * (1.0 - std::sqrt(min_edge_h2 * (1.0 - min_edge_h2 / 4.0)));
}

double braun_pokutta(double i, double risk, double w_min, double w_max) {
  if (!(w_max > 0.0 && w_max < 1.0))
    throw std::domain_error("braun_pokutta: need 0 < w_max < 1");
  if (!(w_min >= 0.0) || !(w_min + w_max < 1.0))
    throw std::domain_error("braun_pokutta: need w_min >= 0 and w_min + w_max < 1");
  if (!(risk > 0.0 && risk < 1.0))
    throw std::domain_error("braun_pokutta: risk must lie in (0, 1)");
  return (-i - binary_entropy(risk) - std::log(w_max)) /
         std::log((1.0 - w_min) / w_max);
}

double likelihood_ratio_bound(int n_alternatives, double s, double alpha) {
  if (n_alternatives < 2) throw std::domain_error("likelihood_ratio_bound: N must be >= 2");
  if (!(alpha < 1.0)) throw std::domain_error("likelihood_ratio_bound: alpha must be < 1");
  if (!(s >= 1.0 - alpha))
    throw std::domain_error("likelihood_ratio_bound: requires s >= 1 - alpha");
  const double n = n_alternatives;
  return n * (1.0 - alpha) / (s + n);
}

BoundReport partitioned_bound(const std::vector<std::pair<double, BoundReport>>& pieces) {
  double sum_w = 0.0, value = 0.0;
  for (const auto& [w, piece] : pieces) {
    if (!(w >= 0.0)) throw std::invalid_argument("partitioned_bound: negative weight");
    sum_w += w;
    value += w * piece.value;
  }
  if (sum_w > 1.0 + 1e-12)
    throw std::invalid_argument("partitioned_bound: weights exceed 1");
  BoundReport rep;
  rep.bound_name = "partitioned";
  rep.value = value;
  rep.parameters["total_weight"] = sum_w;
  return rep;
}

BoundReport density_partition_bound(double a_const, double v_const, double p, int d,
                                    const std::function<double(double)>& r_delta_integral,
                                    const std::vector<double>& deltas) {
  if (!(a_const > 0.0 && v_const > 0.0 && p > 0.0) || d < 1)
    throw std::invalid_argument("density_partition_bound: need positive A, V, p and d >= 1");
  const double delta_cap = 1.0 / std::sqrt(a_const);
  BoundReport rep;
  rep.bound_name = "density_partition";
  double best = 0.0, best_delta = 0.0;
  for (double delta : deltas) {
    if (!(delta > 0.0) || delta > delta_cap * (1.0 + 1e-12))
      throw std::domain_error("density_partition_bound: delta outside (0, A^{-1/2}]");
    const double v = std::exp(-2.0 * p) * std::pow(delta, p) *
                     std::pow(8.0 * v_const, -p / d) * r_delta_integral(delta);
    if (v > best) {
      best = v;
      best_delta = delta;
    }
  }
  rep.value = 0.5 * best;
  rep.parameters["delta"] = best_delta;
  rep.parameters["A"] = a_const;
  rep.parameters["V"] = v_const;
  rep.parameters["p"] = p;
  rep.parameters["d"] = d;
  return rep;
}

}  // namespace bayesbound

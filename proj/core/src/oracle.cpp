#include "bayesbound/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace bayesbound {

namespace {

// theta ~ uniform on the radius-gamma ball: direction from a normalized
// Gaussian, radius gamma * U^{1/d}.
Eigen::VectorXd sample_uniform_ball(CounterRng& rng, int d, double gamma) {
  Eigen::VectorXd z(d);
  for (int i = 0; i < d; ++i) z(i) = rng.normal();
  const double norm = z.norm();
  const double r = gamma * std::pow(rng.uniform(), 1.0 / d);
  if (norm == 0.0) return Eigen::VectorXd::Zero(d);
  return z * (r / norm);
}

Eigen::VectorXd sample_gaussian(CounterRng& rng, int d, double tau) {
  Eigen::VectorXd z(d);
  for (int i = 0; i < d; ++i) z(i) = tau * rng.normal();
  return z;
}

Eigen::VectorXd project_to_ball(const Eigen::VectorXd& x, double gamma) {
  const double n = x.norm();
  return n <= gamma ? x : Eigen::VectorXd(x * (gamma / n));
}

// Posterior mean under the uniform-ball prior: an axis grid for d <= 2,
// self-normalized importance sampling from the prior for d > 2. An upper
// bound device (any estimator works), not an exact Bayes rule.
Eigen::VectorXd posterior_mean_uniform_ball(const Eigen::VectorXd& x, CounterRng& rng,
                                            const GaussianLocationFamily& fam) {
  const double inv2s2 = 1.0 / (2.0 * fam.sigma * fam.sigma);
  Eigen::VectorXd num = Eigen::VectorXd::Zero(fam.d);
  double den = 0.0;
  auto accumulate = [&](const Eigen::VectorXd& g) {
    const double w = std::exp(-(x - g).squaredNorm() * inv2s2);
    num += w * g;
    den += w;
  };
  if (fam.d <= 2) {
    const int side = 64;
    Eigen::VectorXd g(fam.d);
    if (fam.d == 1) {
      for (int i = 0; i < side; ++i) {
        g(0) = -fam.gamma + (2.0 * fam.gamma) * (i + 0.5) / side;
        accumulate(g);
      }
    } else {
      for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
          g(0) = -fam.gamma + (2.0 * fam.gamma) * (i + 0.5) / side;
          g(1) = -fam.gamma + (2.0 * fam.gamma) * (j + 0.5) / side;
          if (g.norm() <= fam.gamma) accumulate(g);
        }
    }
  } else {
    for (int k = 0; k < 128; ++k) accumulate(sample_uniform_ball(rng, fam.d, fam.gamma));
  }
  return den > 0.0 ? Eigen::VectorXd(num / den) : project_to_ball(x, fam.gamma);
}

double mc_gaussian_location(const GaussianLocationFamily& fam, Estimator est,
                            std::size_t n_samples, std::uint64_t seed, double* se) {
  fam.validate();
  const CounterRng master(seed);
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t s = 0; s < n_samples; ++s) {
    CounterRng rng = master.substream(s);
    Eigen::VectorXd theta =
        fam.prior == GaussianLocationFamily::PriorKind::gaussian
            ? sample_gaussian(rng, fam.d, fam.tau)
            : sample_uniform_ball(rng, fam.d, fam.gamma);
    Eigen::VectorXd x(fam.d);
    for (int i = 0; i < fam.d; ++i) x(i) = theta(i) + fam.sigma * rng.normal();
    Eigen::VectorXd a;
    switch (est) {
      case Estimator::mle:
        a = fam.prior == GaussianLocationFamily::PriorKind::uniform_ball
                ? project_to_ball(x, fam.gamma)
                : x;
        break;
      case Estimator::posterior_mean_grid:
        if (fam.prior == GaussianLocationFamily::PriorKind::gaussian) {
          // Conjugate closed form.
          a = x * (fam.tau * fam.tau / (fam.sigma * fam.sigma + fam.tau * fam.tau));
        } else {
          a = posterior_mean_uniform_ball(x, rng, fam);
        }
        break;
      default:
        throw std::invalid_argument("mc_integrated_risk: estimator unsupported for this family");
    }
    const double loss = (theta - a).squaredNorm();
    sum += loss;
    sum_sq += loss * loss;
  }
  const double mean = sum / n_samples;
  if (se) *se = std::sqrt(std::fmax(0.0, sum_sq / n_samples - mean * mean) / n_samples);
  return mean;
}

double mc_spiked(const SpikedCovarianceFamily& fam, Estimator est, std::size_t n_samples,
                 std::uint64_t seed, double* se) {
  fam.validate();
  if (est != Estimator::pca_top)
    throw std::invalid_argument("mc_integrated_risk: estimator unsupported for this family");
  const CounterRng master(seed);
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t s = 0; s < n_samples; ++s) {
    CounterRng rng = master.substream(s);
    const Eigen::VectorXd theta = sample_uniform_ball(rng, fam.d, 1.0);
    // X = Z + g theta, Z ~ N(0, I), g ~ N(0,1) gives cov I + theta theta'.
    Eigen::MatrixXd scatter = Eigen::MatrixXd::Zero(fam.d, fam.d);
    Eigen::VectorXd x(fam.d);
    for (int i = 0; i < fam.n; ++i) {
      const double g = rng.normal();
      for (int j = 0; j < fam.d; ++j) x(j) = rng.normal() + g * theta(j);
      scatter += x * x.transpose();
    }
    scatter /= static_cast<double>(fam.n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(scatter);
    const int top = fam.d - 1;  // eigenvalues ascending
    Eigen::VectorXd v = es.eigenvectors().col(top);
    // Deterministic sign: largest-magnitude coordinate made positive.
    int arg = 0;
    for (int j = 1; j < fam.d; ++j)
      if (std::fabs(v(j)) > std::fabs(v(arg))) arg = j;
    if (v(arg) < 0.0) v = -v;
    const double spike = std::sqrt(std::fmax(0.0, es.eigenvalues()(top) - 1.0));
    const Eigen::VectorXd a = v * std::fmin(spike, 1.0);
    const double loss = (theta - a).squaredNorm();
    sum += loss;
    sum_sq += loss * loss;
  }
  const double mean = sum / n_samples;
  if (se) *se = std::sqrt(std::fmax(0.0, sum_sq / n_samples - mean * mean) / n_samples);
  return mean;
}

double mc_glm(const GLMSpec& spec, Estimator est, std::size_t n_samples, std::uint64_t seed,
              double* se) {
  spec.validate();
  if (est != Estimator::projection_lse)
    throw std::invalid_argument("mc_integrated_risk: estimator unsupported for this family");
  std::function<double(double)> b_prime = spec.b_prime;
  if (!b_prime) b_prime = [](double t) { return 1.0 / (1.0 + std::exp(-t)); };  // logistic
  const int n = spec.n(), d = spec.d();
  const double lambda = 1.0 / (spec.tau * spec.tau);  // MAP ridge weight
  // Gradient step from the smoothness bound K n lambda_max / a_phi + lambda.
  const double step =
      1.0 / (spec.curvature_cap * n * spec.lambda_max / spec.a_phi + lambda);
  const CounterRng master(seed);
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t s = 0; s < n_samples; ++s) {
    CounterRng rng = master.substream(s);
    const Eigen::VectorXd theta = sample_gaussian(rng, d, spec.tau);
    Eigen::VectorXd y(n);
    const Eigen::VectorXd eta = spec.design * theta;
    for (int i = 0; i < n; ++i) y(i) = rng.uniform() < b_prime(eta(i)) ? 1.0 : 0.0;
    // Ridge-penalized GLM fit by gradient descent (objective is smooth and
    // lambda-strongly convex; 300 fixed steps reach well past MC accuracy).
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(d);
    Eigen::VectorXd mu(n);
    for (int it = 0; it < 300; ++it) {
      const Eigen::VectorXd lin = spec.design * beta;
      for (int i = 0; i < n; ++i) mu(i) = b_prime(lin(i));
      const Eigen::VectorXd grad =
          spec.design.transpose() * (mu - y) / spec.a_phi + lambda * beta;
      beta -= step * grad;
    }
    const double loss = (theta - beta).squaredNorm();
    sum += loss;
    sum_sq += loss * loss;
  }
  const double mean = sum / n_samples;
  if (se) *se = std::sqrt(std::fmax(0.0, sum_sq / n_samples - mean * mean) / n_samples);
  return mean;
}

}  // namespace

OracleResult exact_bayes_risk(const DiscreteProblem& problem) {
  problem.validate();
  double risk = 0.0;
  for (std::size_t x = 0; x < problem.alphabet_size(); ++x) {
    double best = kInf;
    for (std::size_t a = 0; a < problem.num_actions(); ++a) {
      double post = 0.0;
      for (std::size_t t = 0; t < problem.num_hypotheses(); ++t)
        post += problem.prior[t] * problem.channel[t][x] * problem.loss[t][a];
      if (post < best) best = post;  // strict <: ties keep the lowest index
    }
    risk += best;
  }
  OracleResult res;
  res.risk = risk;
  res.kind = OracleKind::exact;
  return res;
}

std::vector<int> bayes_rule(const DiscreteProblem& problem, const std::vector<double>& prior) {
  if (prior.size() != problem.num_hypotheses())
    throw std::invalid_argument("bayes_rule: prior size mismatch");
  std::vector<int> rule(problem.alphabet_size(), 0);
  for (std::size_t x = 0; x < problem.alphabet_size(); ++x) {
    double best = kInf;
    int best_a = 0;
    for (std::size_t a = 0; a < problem.num_actions(); ++a) {
      double post = 0.0;
      for (std::size_t t = 0; t < problem.num_hypotheses(); ++t)
        post += prior[t] * problem.channel[t][x] * problem.loss[t][a];
      if (post < best) {
        best = post;
        best_a = static_cast<int>(a);
      }
    }
    rule[x] = best_a;
  }
  return rule;
}

OracleResult exact_minimax_upper(const DiscreteProblem& problem) {
  problem.validate();
  const std::vector<double> uniform(problem.num_hypotheses(),
                                    1.0 / static_cast<double>(problem.num_hypotheses()));
  // Risk of the uniform-prior Bayes rule, randomizing uniformly over tied
  // optimal actions.  Randomization only lowers the worst-case risk relative
  // to an arbitrary deterministic tie-break, so this is still a certified
  // minimax upper bound (and a tighter one when symmetric ties occur).
  const std::size_t num_a = problem.num_actions();
  std::vector<std::vector<double>> action_weight(problem.alphabet_size(),
                                                 std::vector<double>(num_a, 0.0));
  for (std::size_t x = 0; x < problem.alphabet_size(); ++x) {
    std::vector<double> post(num_a, 0.0);
    double best = kInf;
    for (std::size_t a = 0; a < num_a; ++a) {
      for (std::size_t t = 0; t < problem.num_hypotheses(); ++t)
        post[a] += uniform[t] * problem.channel[t][x] * problem.loss[t][a];
      best = std::fmin(best, post[a]);
    }
    const double tie_tol = 1e-12 * std::fmax(1.0, std::fabs(best));
    int ties = 0;
    for (std::size_t a = 0; a < num_a; ++a)
      if (post[a] <= best + tie_tol) ++ties;
    for (std::size_t a = 0; a < num_a; ++a)
      if (post[a] <= best + tie_tol) action_weight[x][a] = 1.0 / ties;
  }
  double worst = 0.0;
  for (std::size_t t = 0; t < problem.num_hypotheses(); ++t) {
    double r = 0.0;
    for (std::size_t x = 0; x < problem.alphabet_size(); ++x)
      for (std::size_t a = 0; a < num_a; ++a)
        if (action_weight[x][a] > 0.0)
          r += problem.channel[t][x] * action_weight[x][a] * problem.loss[t][a];
    worst = std::fmax(worst, r);
  }
  OracleResult res;
  res.risk = worst;
  res.kind = OracleKind::exact;
  return res;
}

OracleResult gaussian_conjugate_bayes_risk(int d, double sigma, double tau) {
  if (d < 1 || !(sigma > 0.0) || !(tau > 0.0))
    throw std::invalid_argument("gaussian_conjugate_bayes_risk: invalid inputs");
  OracleResult res;
  res.risk = d * sigma * sigma * tau * tau / (sigma * sigma + tau * tau);
  res.kind = OracleKind::closed_form;
  return res;
}

OracleResult mc_integrated_risk(const ModelFamily& family, Estimator estimator,
                                std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < 1000)
    throw std::invalid_argument("mc_integrated_risk: n_samples must be >= 1000");
  double se = 0.0;
  double risk = 0.0;
  if (const auto* g = std::get_if<GaussianLocationFamily>(&family)) {
    risk = mc_gaussian_location(*g, estimator, n_samples, seed, &se);
  } else if (const auto* sp = std::get_if<SpikedCovarianceFamily>(&family)) {
    risk = mc_spiked(*sp, estimator, n_samples, seed, &se);
  } else {
    risk = mc_glm(std::get<GLMSpec>(family), estimator, n_samples, seed, &se);
  }
  OracleResult res;
  res.risk = risk;
  res.kind = OracleKind::monte_carlo;
  res.std_error = se;
  res.seed = seed;
  res.n_samples = n_samples;
  return res;
}

SmallBallProfile small_ball_profile_mc(const GaussianLocationFamily& family,
                                       const std::vector<double>& t_grid,
                                       std::size_t n_samples, std::uint64_t seed) {
  family.validate();
  if (t_grid.empty()) throw std::invalid_argument("small_ball_profile_mc: empty t grid");
  // Candidate centers: the prior mean plus a short first-axis grid.
  std::vector<Eigen::VectorXd> centers;
  const double scale =
      family.prior == GaussianLocationFamily::PriorKind::gaussian ? family.tau : family.gamma;
  for (double c : {0.0, -0.5, 0.5, -1.0, 1.0}) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(family.d);
    a(0) = c * scale;
    centers.push_back(std::move(a));
  }
  const CounterRng master(seed);
  std::vector<Eigen::VectorXd> thetas;
  thetas.reserve(n_samples);
  for (std::size_t s = 0; s < n_samples; ++s) {
    CounterRng rng = master.substream(s);
    thetas.push_back(family.prior == GaussianLocationFamily::PriorKind::gaussian
                         ? sample_gaussian(rng, family.d, family.tau)
                         : sample_uniform_ball(rng, family.d, family.gamma));
  }
  std::vector<double> ts = t_grid;
  std::sort(ts.begin(), ts.end());
  std::vector<std::pair<double, double>> samples;
  double running = 0.0;
  for (double t : ts) {
    double sup = 0.0;
    for (const auto& a : centers) {
      std::size_t inside = 0;
      for (const auto& th : thetas)
        if ((th - a).squaredNorm() < t) ++inside;
      sup = std::fmax(sup, static_cast<double>(inside) / static_cast<double>(n_samples));
    }
    running = std::fmax(running, sup);
    samples.emplace_back(t, running);
  }
  return SmallBallProfile::from_samples(std::move(samples));
}

}  // namespace bayesbound

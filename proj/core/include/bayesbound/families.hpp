#pragma once

#include <functional>
#include <variant>

#include <Eigen/Dense>

namespace bayesbound {

// Gaussian location family N(theta, sigma^2 I_d) with one of three priors
// on theta: uniform on the radius-gamma ball, spherical Gaussian N(0,
// tau^2 I), or an abstract density bounded by W with second moment V.
struct GaussianLocationFamily {
  enum class PriorKind { uniform_ball, gaussian, bounded_density };
  int d = 1;
  double sigma = 1.0;
  PriorKind prior = PriorKind::uniform_ball;
  double gamma = 1.0;  // uniform_ball radius
  double tau = 1.0;    // gaussian prior scale
  double density_cap = 1.0;   // W: sup of the prior density
  double second_moment = 0.0; // V: E max_i |theta_i|^2-style bound per the appendix

  void validate() const;  // throws std::invalid_argument
};

// Generalized linear model with an n x d design, dispersion a(phi),
// curvature cap K >= sup b'' on the operating range (caller-certified;
// 1/4 for the logistic model), and a N(0, tau^2 I) prior. b and b_prime
// are used only for data simulation (logistic by default).
struct GLMSpec {
  Eigen::MatrixXd design;  // n x d
  double a_phi = 1.0;
  double curvature_cap = 0.25;  // K
  double tau = 1.0;
  double lambda_max = 1.0;  // max eigenvalue of X'X / n
  std::function<double(double)> b;        // cumulant
  std::function<double(double)> b_prime;  // mean function

  int n() const { return static_cast<int>(design.rows()); }
  int d() const { return static_cast<int>(design.cols()); }
  void validate() const;  // checks lambda_max against the design (1e-8)
};

// Spiked covariance family: X_1..X_n iid N(0, I_d + theta theta'),
// ||theta|| <= 1, with the paper's standing assumption n >= d/2.
struct SpikedCovarianceFamily {
  int n = 1;
  int d = 1;
  void validate() const;
};

using ModelFamily = std::variant<GaussianLocationFamily, SpikedCovarianceFamily, GLMSpec>;

// Volume of the d-dimensional Euclidean unit ball, pi^{d/2} / Gamma(d/2+1).
double unit_ball_volume(int d);

}  // namespace bayesbound

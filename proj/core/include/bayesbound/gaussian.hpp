#pragma once

#include <Eigen/Dense>

namespace bayesbound {

// A d-dimensional Gaussian N(mean, covariance). Use spherical() for the
// sigma^2 * I shorthand. Covariance must be symmetric positive definite.
struct GaussianSpec {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;

  static GaussianSpec spherical(Eigen::VectorXd mean, double sigma2);
  void validate() const;  // throws std::invalid_argument
};

// Standard Gaussian KL: (1/2)[tr(Sb^-1 Sa) + (mb-ma)' Sb^-1 (mb-ma) - d
// + log det Sb / det Sa]. Equal spherical covariances reduce to
// ||ma - mb||^2 / (2 sigma^2). Throws on dimension mismatch / non-PD input.
double gaussian_kl(const GaussianSpec& a, const GaussianSpec& b);

// chi^2(N(theta1, s^2 I) || N(theta2, s^2 I)) = exp(||theta1-theta2||^2/s^2) - 1.
double gaussian_chi2_location(const Eigen::VectorXd& theta1,
                              const Eigen::VectorXd& theta2, double sigma);

// Upper bound chi^2(N(0,S1) || N(0,S2)) <= exp(||S1-S2||_F^2 / lmin(S2)^2) - 1,
// valid when 2 S1^-1 - S2^-1 is PD and ||S1-S2||_F^2 <= (1/2) lmin(S2)^2.
// Throws std::domain_error naming whichever condition fails.
double gaussian_chi2_covariance(const Eigen::MatrixXd& sigma1,
                                const Eigen::MatrixXd& sigma2);

}  // namespace bayesbound

#include "bayesbound/gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace bayesbound {

GaussianSpec GaussianSpec::spherical(Eigen::VectorXd mean, double sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("GaussianSpec: sigma2 must be > 0");
  GaussianSpec g;
  const auto d = mean.size();
  g.mean = std::move(mean);
  g.covariance = sigma2 * Eigen::MatrixXd::Identity(d, d);
  return g;
}

void GaussianSpec::validate() const {
  if (covariance.rows() != covariance.cols() || covariance.rows() != mean.size())
    throw std::invalid_argument("GaussianSpec: dimension mismatch");
  if ((covariance - covariance.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("GaussianSpec: covariance not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(covariance);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("GaussianSpec: covariance not positive definite");
}

double gaussian_kl(const GaussianSpec& a, const GaussianSpec& b) {
  if (a.mean.size() != b.mean.size())
    throw std::invalid_argument("gaussian_kl: dimension mismatch");
  a.validate();
  b.validate();
  const auto d = static_cast<double>(a.mean.size());
  const Eigen::LLT<Eigen::MatrixXd> llt_b(b.covariance);
  const Eigen::LLT<Eigen::MatrixXd> llt_a(a.covariance);
  const Eigen::MatrixXd b_inv_a = llt_b.solve(a.covariance);
  const Eigen::VectorXd diff = b.mean - a.mean;
  const double maha = diff.dot(llt_b.solve(diff));
  double log_det_ratio = 0.0;  // log det Sb - log det Sa via Cholesky factors
  for (Eigen::Index i = 0; i < a.mean.size(); ++i)
    log_det_ratio += 2.0 * (std::log(llt_b.matrixL()(i, i)) - std::log(llt_a.matrixL()(i, i)));
  return 0.5 * (b_inv_a.trace() + maha - d + log_det_ratio);
}

double gaussian_chi2_location(const Eigen::VectorXd& theta1,
                              const Eigen::VectorXd& theta2, double sigma) {
  if (theta1.size() != theta2.size())
    throw std::invalid_argument("gaussian_chi2_location: dimension mismatch");
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_chi2_location: sigma must be > 0");
  return std::expm1((theta1 - theta2).squaredNorm() / (sigma * sigma));
}

double gaussian_chi2_covariance(const Eigen::MatrixXd& sigma1,
                                const Eigen::MatrixXd& sigma2) {
  if (sigma1.rows() != sigma2.rows() || sigma1.cols() != sigma2.cols() ||
      sigma1.rows() != sigma1.cols())
    throw std::invalid_argument("gaussian_chi2_covariance: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es2(sigma2);
  const double lmin2 = es2.eigenvalues().minCoeff();
  if (lmin2 <= 0.0) throw std::invalid_argument("gaussian_chi2_covariance: Sigma2 not PD");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es1(sigma1);
  if (es1.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("gaussian_chi2_covariance: Sigma1 not PD");
  const Eigen::MatrixXd precision_combo =
      2.0 * sigma1.inverse() - sigma2.inverse();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esc(precision_combo);
  if (esc.eigenvalues().minCoeff() <= 0.0)
    throw std::domain_error(
        "gaussian_chi2_covariance: 2*Sigma1^-1 - Sigma2^-1 is not positive definite");
  const double frob2 = (sigma1 - sigma2).squaredNorm();
  if (frob2 > 0.5 * lmin2 * lmin2)
    throw std::domain_error(
        "gaussian_chi2_covariance: ||Sigma1-Sigma2||_F^2 exceeds lambda_min(Sigma2)^2 / 2");
  return std::expm1(frob2 / (lmin2 * lmin2));
}

}  // namespace bayesbound

#include "bayesbound/families.hpp"

#include <cmath>
#include <stdexcept>

namespace bayesbound {

void GaussianLocationFamily::validate() const {
  if (d < 1) throw std::invalid_argument("GaussianLocationFamily: d must be >= 1");
  if (!(sigma > 0.0)) throw std::invalid_argument("GaussianLocationFamily: sigma must be > 0");
  switch (prior) {
    case PriorKind::uniform_ball:
      if (!(gamma > 0.0))
        throw std::invalid_argument("GaussianLocationFamily: gamma must be > 0");
      break;
    case PriorKind::gaussian:
      if (!(tau > 0.0)) throw std::invalid_argument("GaussianLocationFamily: tau must be > 0");
      break;
    case PriorKind::bounded_density:
      if (!(density_cap > 0.0) || !(second_moment >= 0.0))
        throw std::invalid_argument("GaussianLocationFamily: need W > 0, V >= 0");
      break;
  }
}

void GLMSpec::validate() const {
  if (design.rows() < 1 || design.cols() < 1)
    throw std::invalid_argument("GLMSpec: empty design");
  if (!(a_phi > 0.0) || !(curvature_cap > 0.0) || !(tau > 0.0))
    throw std::invalid_argument("GLMSpec: a_phi, K, tau must be > 0");
  const Eigen::MatrixXd gram = design.transpose() * design / static_cast<double>(design.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const double lmax = es.eigenvalues().maxCoeff();
  if (std::fabs(lmax - lambda_max) > 1e-8 * std::fmax(1.0, lmax))
    throw std::invalid_argument("GLMSpec: lambda_max inconsistent with the design");
}

void SpikedCovarianceFamily::validate() const {
  if (d < 1 || n < 1) throw std::invalid_argument("SpikedCovarianceFamily: need n, d >= 1");
  if (2 * n < d) throw std::invalid_argument("SpikedCovarianceFamily: requires n >= d/2");
}

double unit_ball_volume(int d) {
  if (d < 1) throw std::invalid_argument("unit_ball_volume: d must be >= 1");
  return std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

}  // namespace bayesbound

#include "bayesbound/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace bayesbound {

GaussHermiteRule gauss_hermite(int n) {
  if (n < 1 || n > 512) throw std::invalid_argument("gauss_hermite: n outside [1, 512]");
  // Golub-Welsch: eigen-decompose the symmetric tridiagonal Jacobi matrix
  // with off-diagonals sqrt(k/2); weights are sqrt(pi) * v_1^2.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double off = std::sqrt(k / 2.0);
    jacobi(k - 1, k) = off;
    jacobi(k, k - 1) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  GaussHermiteRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const double sqrt_pi = std::sqrt(M_PI);
  for (int i = 0; i < n; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = sqrt_pi * v0 * v0;
  }
  return rule;
}

GaussHermiteRule gauss_hermite_normal(int n) {
  GaussHermiteRule rule = gauss_hermite(n);
  const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
  const double sqrt2 = std::sqrt(2.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    rule.nodes[i] *= sqrt2;
    rule.weights[i] *= inv_sqrt_pi;
  }
  return rule;
}

}  // namespace bayesbound

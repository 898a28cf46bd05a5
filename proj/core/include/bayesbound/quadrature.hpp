#pragma once

#include <utility>
#include <vector>

namespace bayesbound {

// Gauss-Hermite nodes/weights for integral f(x) e^{-x^2} dx (physicists'
// convention), computed by Golub-Welsch on the Jacobi matrix. n <= 512.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussHermiteRule gauss_hermite(int n);

// Nodes/weights for E[f(Z)], Z ~ N(0,1): substitution z = sqrt(2) x,
// weight / sqrt(pi).
GaussHermiteRule gauss_hermite_normal(int n);

}  // namespace bayesbound

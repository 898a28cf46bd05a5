#pragma once

#include <string>
#include <vector>

#include "bayesbound/distribution.hpp"

namespace bayesbound {

// An upper bound on the number of centers needed so every family member is
// within f-divergence eps^2 of some center. `count` is kept as a double
// (ceilinged to an integer value) because volumetric counts overflow any
// integer type long before they stop being useful inside logarithms.
struct CoveringBound {
  double epsilon = 0.0;
  double count = 1.0;        // >= 1, possibly +inf
  std::string construction;  // "volumetric" | "greedy"
};

// KL cover of the Gaussian location family on the radius-gamma ball:
// count = ceil((3 gamma / (sqrt(2) eps sigma))^d) when sqrt(2) eps sigma
// <= gamma; otherwise 1 (a single center at the origin covers: the KL ball
// radius exceeds the set). Throws std::invalid_argument on nonpositive input.
CoveringBound gaussian_location_kl_cover(double gamma, double sigma, int d, double epsilon);

// chi^2 cover: with eps' = sigma * sqrt(log(1 + eps^2)),
// count = ceil((3 gamma / eps')^d) when eps' <= gamma, else 1.
CoveringBound gaussian_location_chi2_cover(double gamma, double sigma, int d, double epsilon);

// chi^2 cover of the spiked covariance family (Sigma = I + theta theta',
// ||theta|| <= 1): count = ceil((36 n / log(1+eps^2))^{d/2}), valid for
// n >= d/2 and log(1+eps^2) <= 4n. Throws std::domain_error outside the
// proviso (no single-center certificate is available here).
CoveringBound spiked_covariance_chi2_cover(int n, int d, double epsilon);

// Greedy farthest-point cover of a finite family with centers drawn from
// the rows themselves; certifies sup-min divergence <= eps^2 exhaustively.
CoveringBound greedy_cover_finite(const ConvexGenerator& f,
                                  const std::vector<DiscreteDistribution>& rows,
                                  double epsilon);

}  // namespace bayesbound

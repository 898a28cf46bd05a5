#include "bayesbound/covering.hpp"

#include <cmath>
#include <stdexcept>

namespace bayesbound {

namespace {

void check_positive(double gamma, double sigma, int d, double epsilon, const char* who) {
  if (!(gamma > 0.0) || !(sigma > 0.0) || d < 1 || !(epsilon > 0.0))
    throw std::invalid_argument(std::string(who) + ": inputs must be positive, d >= 1");
}

}  // namespace

CoveringBound gaussian_location_kl_cover(double gamma, double sigma, int d, double epsilon) {
  check_positive(gamma, sigma, d, epsilon, "gaussian_location_kl_cover");
  CoveringBound b;
  b.epsilon = epsilon;
  b.construction = "volumetric";
  const double radius = std::sqrt(2.0) * epsilon * sigma;
  // Beyond the proviso a single center at the origin covers the whole ball:
  // every theta has D(P_theta||P_0) = ||theta||^2/(2 sigma^2) <= eps^2.
  b.count = radius <= gamma ? std::ceil(std::pow(3.0 * gamma / radius, d)) : 1.0;
  return b;
}

CoveringBound gaussian_location_chi2_cover(double gamma, double sigma, int d, double epsilon) {
  check_positive(gamma, sigma, d, epsilon, "gaussian_location_chi2_cover");
  CoveringBound b;
  b.epsilon = epsilon;
  b.construction = "volumetric";
  const double radius = sigma * std::sqrt(std::log1p(epsilon * epsilon));
  b.count = radius <= gamma ? std::ceil(std::pow(3.0 * gamma / radius, d)) : 1.0;
  return b;
}

CoveringBound spiked_covariance_chi2_cover(int n, int d, double epsilon) {
  if (d < 1 || !(epsilon > 0.0))
    throw std::invalid_argument("spiked_covariance_chi2_cover: need d >= 1, epsilon > 0");
  if (2 * n < d)
    throw std::domain_error("spiked_covariance_chi2_cover: requires n >= d/2");
  const double g = std::log1p(epsilon * epsilon);
  if (g > 4.0 * n)
    throw std::domain_error("spiked_covariance_chi2_cover: log(1+eps^2) exceeds 4n");
  CoveringBound b;
  b.epsilon = epsilon;
  b.construction = "volumetric";
  b.count = std::ceil(std::pow(36.0 * n / g, d / 2.0));
  return b;
}

CoveringBound greedy_cover_finite(const ConvexGenerator& f,
                                  const std::vector<DiscreteDistribution>& rows,
                                  double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("greedy_cover_finite: epsilon must be > 0");
  if (rows.empty()) throw std::invalid_argument("greedy_cover_finite: no rows");
  const double eps2 = epsilon * epsilon;
  std::vector<std::size_t> centers{0};
  auto min_div_to_centers = [&](std::size_t i) {
    double best = kInf;
    for (std::size_t c : centers) best = std::fmin(best, f_divergence(f, rows[i], rows[c]));
    return best;
  };
  // Farthest-point insertion until every row sits within eps^2 of a center.
  for (;;) {
    double worst = -1.0;
    std::size_t worst_i = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double dv = min_div_to_centers(i);
      if (dv > worst) {
        worst = dv;
        worst_i = i;
      }
    }
    if (worst <= eps2) break;
    centers.push_back(worst_i);
  }
  // Exhaustive certificate of sup-min <= eps^2.
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (min_div_to_centers(i) > eps2)
      throw std::logic_error("greedy_cover_finite: certificate failed");
  CoveringBound b;
  b.epsilon = epsilon;
  b.count = static_cast<double>(centers.size());
  b.construction = "greedy";
  return b;
}

}  // namespace bayesbound

#include "bayesbound/distribution.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bayesbound {

DiscreteDistribution::DiscreteDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("distribution: empty alphabet");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) throw std::invalid_argument("distribution: negative weight");
    sum += w;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("distribution: weights do not sum to 1");
}

DiscreteDistribution DiscreteDistribution::normalized(std::vector<double> raw) {
  double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
  if (!(sum > 0.0)) throw std::invalid_argument("distribution: zero total mass");
  for (double& w : raw) w /= sum;
  return DiscreteDistribution(std::move(raw));
}

double f_divergence(const ConvexGenerator& f, const DiscreteDistribution& p,
                    const DiscreteDistribution& q) {
  if (p.size() != q.size()) throw std::invalid_argument("f_divergence: alphabet mismatch");
  double sum = 0.0;
  double p_mass_off_q = 0.0;  // P{q = 0}
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p[i], qi = q[i];
    if (qi > 0.0) {
      // p = 0 uses f(0) directly rather than evaluate(0).
      const double term = pi > 0.0 ? qi * f.evaluate(pi / qi) : mul0(qi, f.at_zero);
      if (is_pos_inf(term)) return kInf;
      sum += term;
    } else {
      p_mass_off_q += pi;
    }
  }
  const double slope_term = mul0(p_mass_off_q, f.slope_at_infinity);
  if (is_pos_inf(slope_term)) return kInf;
  sum += slope_term;
  // Divergences are nonnegative; forgive rounding at the -1e-12 scale.
  return sum < 0.0 && sum > -1e-12 ? 0.0 : sum;
}

double hellinger_sq(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  if (p.size() != q.size()) throw std::invalid_argument("hellinger_sq: alphabet mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::sqrt(p[i]) - std::sqrt(q[i]);
    sum += d * d;
  }
  return sum;
}

double total_variation(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  if (p.size() != q.size()) throw std::invalid_argument("total_variation: alphabet mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::fabs(p[i] - q[i]);
  return sum / 2.0;
}

DiscreteDistribution pushforward(const DiscreteDistribution& p,
                                 const std::vector<int>& map, int out_size) {
  if (map.size() != p.size()) throw std::invalid_argument("pushforward: map size mismatch");
  std::vector<double> out(static_cast<std::size_t>(out_size), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (map[i] < 0 || map[i] >= out_size)
      throw std::invalid_argument("pushforward: map value out of range");
    out[static_cast<std::size_t>(map[i])] += p[i];
  }
  return DiscreteDistribution(std::move(out));
}

}  // namespace bayesbound

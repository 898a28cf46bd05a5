#pragma once

#include <cstddef>
#include <vector>

#include "bayesbound/generator.hpp"

namespace bayesbound {

// A probability distribution on a finite alphabet. Construction validates
// nonnegativity and normalization (sum within 1e-9 of 1; typical callers
// normalize exactly, and the unit tests assert 1e-12 on library-built ones).
class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::size_t size() const { return weights_.size(); }

  // Normalize a nonnegative vector to a distribution (throws on zero mass).
  static DiscreteDistribution normalized(std::vector<double> raw);

 private:
  std::vector<double> weights_;
};

// D_f(P||Q) = sum_{q>0} q f(p/q) + f'(inf) P{q=0}, convention 0*inf = 0.
// At p = 0, q > 0 the term is q * f(0) (not evaluate(0)). Returns +inf when
// the slope term applies with f'(inf) = +inf. Throws on alphabet mismatch.
double f_divergence(const ConvexGenerator& f, const DiscreteDistribution& p,
                    const DiscreteDistribution& q);

// H^2(P||Q) = sum (sqrt p - sqrt q)^2, in [0, 2]; equals 2 D_{f_{1/2}}.
double hellinger_sq(const DiscreteDistribution& p, const DiscreteDistribution& q);

// ||P - Q||_TV = (1/2) sum |p - q|; equals D_f for f = |x-1|/2.
double total_variation(const DiscreteDistribution& p, const DiscreteDistribution& q);

// Pushforward under a deterministic map x -> map[x] into {0..out_size-1};
// the data-processing test oracle.
DiscreteDistribution pushforward(const DiscreteDistribution& p,
                                 const std::vector<int>& map, int out_size);

}  // namespace bayesbound

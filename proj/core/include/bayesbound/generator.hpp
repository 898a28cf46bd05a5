#pragma once

#include <functional>
#include <string>

#include "bayesbound/common.hpp"

namespace bayesbound {

// A convex function f: (0, inf) -> R with f(1) = 0, together with its
// boundary values f(0) and f'(inf) (limit of f(x)/x as x -> inf), either of
// which may be +inf. This parameterizes every divergence in the library.
struct ConvexGenerator {
  std::function<double(double)> evaluate;  // defined on (0, inf)
  double at_zero = 0.0;                    // f(0), possibly +inf
  double slope_at_infinity = 0.0;          // f'(inf), possibly +inf
  std::string label;                       // "kl", "chi2", "tv", "hellinger", ...
};

// Power divergence generators f_alpha:
//   alpha not in [0,1]:  x^alpha - 1
//   alpha in (0,1):      1 - x^alpha
//   alpha = 1:           x log x        (KL)
//   alpha = 0:           -log x         (reverse KL)
// Labels: 1 -> "kl", 2 -> "chi2", 1/2 -> "hellinger", else "power(alpha)".
ConvexGenerator power_generator(double alpha);

// f(x) = |x - 1| / 2 (total variation), f(0) = 1/2, f'(inf) = 1/2.
ConvexGenerator tv_generator();

// f(x) = min(1, s) - min(x, s): the piecewise-linear generator behind the
// Tsybakov-style likelihood-ratio bound. f'(inf) = 0, f(0) = min(1, s).
// Throws std::invalid_argument for s <= 0.
ConvexGenerator tsybakov_generator(double s);

// Convenience aliases for the four named generators.
ConvexGenerator kl_generator();
ConvexGenerator chi2_generator();
ConvexGenerator hellinger_generator();  // f_{1/2}; divergence = H^2 / 2

// Spot-check midpoint convexity, f(1) = 0, and at_zero consistency on the
// grid x = 2^k, k = -20..20. Returns false (and fills *why) on failure;
// construction helpers warn to stderr rather than erroring, since exact
// convexity of a user-supplied callable is untestable.
bool spot_check_generator(const ConvexGenerator& f, std::string* why = nullptr);

// Wrap a user-supplied generator, running the spot check (warning only).
ConvexGenerator make_generator(std::function<double(double)> evaluate, double at_zero,
                               double slope_at_infinity, std::string label);

}  // namespace bayesbound

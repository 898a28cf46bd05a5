#include "bayesbound/rng.hpp"

#include <cmath>

namespace bayesbound {

double CounterRng::normal() {
  // Box-Muller; u1 is kept away from 0 so log() is finite.
  double u1 = uniform();
  double u2 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

double CounterRng::exponential() {
  double u = uniform();
  return -std::log1p(-u);
}

}  // namespace bayesbound

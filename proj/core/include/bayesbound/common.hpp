#pragma once

#include <cmath>
#include <limits>

namespace bayesbound {

// Extended reals are plain IEEE doubles; +infinity is the sentinel for
// divergent quantities (f(0), f'(inf), divergences without absolute
// continuity). IEEE arithmetic gives the right limits everywhere except
// 0 * inf, which call sites must resolve to 0 per the divergence convention.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_pos_inf(double x) { return std::isinf(x) && x > 0; }

// Product with the convention 0 * inf = 0 (mass-zero events contribute
// nothing even against an infinite slope).
inline double mul0(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

}  // namespace bayesbound

#include "bayesbound/phi.hpp"

#include <cmath>
#include <stdexcept>

namespace bayesbound {

namespace {

constexpr double kBisectTol = 1e-10;
constexpr int kBisectMaxIter = 200;
constexpr double kFdStep = 1e-7;

// b f(a/b) with the a = 0 boundary routed through f(0).
double edge_term(const ConvexGenerator& f, double num, double den) {
  if (den <= 0.0) return 0.0;
  return num > 0.0 ? den * f.evaluate(num / den) : mul0(den, f.at_zero);
}

}  // namespace

double phi(const ConvexGenerator& f, double a, double b) {
  if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0))
    throw std::domain_error("phi: arguments must lie in [0, 1]");
  if (b > 0.0 && b < 1.0) {
    const double t1 = edge_term(f, a, b);
    const double t2 = edge_term(f, 1.0 - a, 1.0 - b);
    if (is_pos_inf(t1) || is_pos_inf(t2)) return kInf;
    const double v = t1 + t2;
    return v < 0.0 && v > -1e-12 ? 0.0 : v;
  }
  // b = 0: f(1-a) + a f'(inf);  b = 1: f(a) + (1-a) f'(inf).
  const double base = b == 0.0 ? (a < 1.0 ? f.evaluate(1.0 - a) : f.at_zero)
                               : (a > 0.0 ? f.evaluate(a) : f.at_zero);
  const double slope = mul0(b == 0.0 ? a : 1.0 - a, f.slope_at_infinity);
  if (is_pos_inf(base) || is_pos_inf(slope)) return kInf;
  return base + slope;
}

double phi_left_derivative(const ConvexGenerator& f, double r, double b) {
  if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("phi_left_derivative: r outside (0, 1]");
  if (!(r <= b && b <= 1.0)) throw std::domain_error("phi_left_derivative: need r <= b <= 1");
  if (b > 0.0 && b < 1.0) {
    if (f.label == "kl" && r > 0.0 && r < 1.0)
      return std::log(r / b) - std::log((1.0 - r) / (1.0 - b));
    if (f.label == "chi2") return 2.0 * (r - b) / (b * (1.0 - b));
    if (f.label == "tv") return r <= b ? -1.0 : 1.0;
  }
  // Backward difference (one-sided: the left derivative is what Eq. (expb) uses).
  const double h = std::fmin(kFdStep, r / 2.0);
  return (phi(f, r, b) - phi(f, r - h, b)) / h;
}

PhiInversionResult invert_phi(const ConvexGenerator& f, double informativity, double r0) {
  if (!(r0 > 0.0 && r0 <= 1.0)) throw std::domain_error("invert_phi: r0 outside (0, 1]");
  PhiInversionResult res;
  res.method = PhiInversionResult::Method::bisection;
  if (is_pos_inf(informativity) || phi(f, 0.0, r0) <= informativity) {
    res.lower_bound = 0.0;
    return res;
  }
  // a -> phi_f(a, r0) is non-increasing on [0, r0] with phi(r0, r0) = 0;
  // maintain phi(lo) >= informativity >= phi(hi).
  double lo = 0.0, hi = r0;
  int it = 0;
  while (hi - lo > kBisectTol && it < kBisectMaxIter) {
    const double mid = 0.5 * (lo + hi);
    if (phi(f, mid, r0) >= informativity)
      lo = mid;
    else
      hi = mid;
    ++it;
  }
  res.lower_bound = lo;  // the conservative side of the crossing
  res.iterations = it;
  return res;
}

double explicit_tangent_bound(const ConvexGenerator& f, double informativity,
                              double r0, double r) {
  if (!(r > 0.0 && r <= r0)) throw std::domain_error("explicit_tangent_bound: need 0 < r <= r0");
  const double slope = phi_left_derivative(f, r, r0);
  if (slope == 0.0)
    throw std::domain_error("explicit_tangent_bound: zero left derivative at r");
  const double value = r + (informativity - phi(f, r, r0)) / slope;
  return std::fmax(0.0, std::fmin(r0, value));
}

double u_f_generic(const ConvexGenerator& f, double x) {
  if (!(x >= 0.0)) throw std::domain_error("u_f: x must be >= 0");
  // b -> phi_f(1/2, b) is non-decreasing on [1/2, 1].
  if (!(phi(f, 0.5, 1.0) > x)) return 1.0;
  double lo = 0.5, hi = 1.0;
  int it = 0;
  while (hi - lo > kBisectTol && it < kBisectMaxIter) {
    const double mid = 0.5 * (lo + hi);
    if (phi(f, 0.5, mid) > x)
      hi = mid;
    else
      lo = mid;
    ++it;
  }
  return lo;  // infimum side, matching the strict ">" in the definition
}

double u_f(const ConvexGenerator& f, double x) {
  if (!(x >= 0.0)) throw std::domain_error("u_f: x must be >= 0");
  if (f.label == "kl") return 0.5 + 0.5 * std::sqrt(-std::expm1(-2.0 * x));
  if (f.label == "chi2") return 0.5 + 0.5 * std::sqrt(x / (1.0 + x));
  if (f.label == "tv") return std::fmin(1.0, 0.5 + x);
  if (f.label == "hellinger") {
    const double cap = 1.0 - 1.0 / std::sqrt(2.0);
    if (x >= cap) return 1.0;
    return 0.5 + (1.0 - x) * std::sqrt(x * (2.0 - x));
  }
  return u_f_generic(f, x);
}

double u_f_c(const ConvexGenerator& f, double c, double x) {
  if (!(c > 0.0 && c <= 1.0)) throw std::domain_error("u_f_c: c outside (0, 1]");
  if (!(x >= 0.0)) throw std::domain_error("u_f_c: x must be >= 0");
  if (phi(f, c, c) >= x) return c;  // x = 0 (phi(c,c) = 0)
  if (!(phi(f, c, 1.0) >= x)) return 1.0;
  double lo = c, hi = 1.0;
  int it = 0;
  while (hi - lo > kBisectTol && it < kBisectMaxIter) {
    const double mid = 0.5 * (lo + hi);
    if (phi(f, c, mid) >= x)
      hi = mid;
    else
      lo = mid;
    ++it;
  }
  return hi;  // smallest b with phi_f(c, b) >= x
}

}  // namespace bayesbound

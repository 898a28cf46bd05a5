#include "bayesbound/generator.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace bayesbound {

namespace {

std::string power_label(double alpha) {
  if (alpha == 1.0) return "kl";
  if (alpha == 2.0) return "chi2";
  if (alpha == 0.5) return "hellinger";
  std::ostringstream oss;
  oss << "power(" << alpha << ")";
  return oss.str();
}

}  // namespace

ConvexGenerator power_generator(double alpha) {
  ConvexGenerator g;
  g.label = power_label(alpha);
  if (alpha == 1.0) {
    g.evaluate = [](double x) { return x * std::log(x); };
    g.at_zero = 0.0;  // lim x log x
    g.slope_at_infinity = kInf;
  } else if (alpha == 0.0) {
    g.evaluate = [](double x) { return -std::log(x); };
    g.at_zero = kInf;
    g.slope_at_infinity = 0.0;
  } else if (alpha > 0.0 && alpha < 1.0) {
    g.evaluate = [alpha](double x) { return 1.0 - std::pow(x, alpha); };
    g.at_zero = 1.0;
    g.slope_at_infinity = 0.0;
  } else {
    // alpha < 0 or alpha > 1: x^alpha - 1, convex.
    g.evaluate = [alpha](double x) { return std::pow(x, alpha) - 1.0; };
    g.at_zero = alpha > 1.0 ? -1.0 : kInf;
    g.slope_at_infinity = alpha > 1.0 ? kInf : 0.0;
  }
  return g;
}

ConvexGenerator tv_generator() {
  ConvexGenerator g;
  g.evaluate = [](double x) { return std::fabs(x - 1.0) / 2.0; };
  g.at_zero = 0.5;
  g.slope_at_infinity = 0.5;
  g.label = "tv";
  return g;
}

ConvexGenerator tsybakov_generator(double s) {
  if (!(s > 0.0)) throw std::invalid_argument("tsybakov_generator: s must be > 0");
  ConvexGenerator g;
  g.evaluate = [s](double x) { return std::fmin(1.0, s) - std::fmin(x, s); };
  g.at_zero = std::fmin(1.0, s);
  g.slope_at_infinity = 0.0;
  std::ostringstream oss;
  oss << "tsybakov(" << s << ")";
  g.label = oss.str();
  return g;
}

ConvexGenerator kl_generator() { return power_generator(1.0); }
ConvexGenerator chi2_generator() { return power_generator(2.0); }
ConvexGenerator hellinger_generator() { return power_generator(0.5); }

bool spot_check_generator(const ConvexGenerator& f, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!f.evaluate) return fail("evaluate is empty");
  if (std::fabs(f.evaluate(1.0)) > 1e-12) return fail("evaluate(1) != 0");
  // Midpoint convexity on x = 2^k, k = -20..20 (all pairs on the grid).
  for (int i = -20; i <= 20; ++i) {
    for (int j = i; j <= 20; ++j) {
      const double x = std::ldexp(1.0, i), y = std::ldexp(1.0, j);
      const double lhs = f.evaluate((x + y) / 2.0);
      const double rhs = (f.evaluate(x) + f.evaluate(y)) / 2.0;
      if (lhs > rhs + 1e-12) return fail("midpoint convexity violated on the dyadic grid");
    }
  }
  if (!is_pos_inf(f.at_zero) && f.at_zero < f.evaluate(std::ldexp(1.0, -20)) - 1e-9)
    return fail("at_zero below the small-x limit of evaluate");
  return true;
}

ConvexGenerator make_generator(std::function<double(double)> evaluate, double at_zero,
                               double slope_at_infinity, std::string label) {
  ConvexGenerator g;
  g.evaluate = std::move(evaluate);
  g.at_zero = at_zero;
  g.slope_at_infinity = slope_at_infinity;
  g.label = std::move(label);
  std::string why;
  if (!spot_check_generator(g, &why))
    std::fprintf(stderr, "warning: generator '%s' failed its spot check: %s\n",
                 g.label.c_str(), why.c_str());
  return g;
}

}  // namespace bayesbound

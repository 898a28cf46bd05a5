#pragma once

#include "bayesbound/generator.hpp"

namespace bayesbound {

// phi_f(a, b): the f-divergence between Bernoulli(a) and Bernoulli(b).
//   0 < b < 1:  b f(a/b) + (1-b) f((1-a)/(1-b))
//   b = 0:      f(1-a) + a f'(inf)
//   b = 1:      f(a) + (1-a) f'(inf)
// Throws std::domain_error if a or b is outside [0, 1].
double phi(const ConvexGenerator& f, double a, double b);

// Left derivative of a -> phi_f(a, b) at a = r, for 0 < r <= b <= 1.
// Closed forms for KL / chi2 / TV (by label); otherwise a backward
// difference with step 1e-7. Nonpositive on (0, b].
double phi_left_derivative(const ConvexGenerator& f, double r, double b);

struct PhiInversionResult {
  double lower_bound = 0.0;  // in [0, r0]
  enum class Method { bisection, explicit_tangent, closed_form } method = Method::bisection;
  int iterations = 0;
};

// Invert phi_f(., r0) against an informativity level: returns the largest
// r in [0, r0] with phi_f(r, r0) >= informativity (phi is non-increasing in
// r on [0, r0]), i.e. the crossing point; this r is a Bayes-risk lower
// bound for zero-one loss. Bisection, absolute tolerance 1e-10, <= 200
// iterations; returns 0 when phi_f(0, r0) <= informativity (including
// informativity = +inf).
PhiInversionResult invert_phi(const ConvexGenerator& f, double informativity, double r0);

// Tangent-line bound at r: r + (informativity - phi_f(r,r0)) / phi'_f(r-,r0),
// clamped to [0, r0]. Throws std::domain_error when the left derivative
// vanishes (tangent unusable at this r). Never exceeds the invert_phi value.
double explicit_tangent_bound(const ConvexGenerator& f, double informativity,
                              double r0, double r);

// u_f(x) = inf{ b in [1/2, 1] : phi_f(1/2, b) > x }. Closed forms are
// dispatched by label (kl, chi2, tv, hellinger); everything else uses the
// generic bisection below. Non-decreasing in x; u_f(0) = 1/2.
double u_f(const ConvexGenerator& f, double x);

// Generic bisection form of u_f (exposed so tests can compare against the
// closed forms).
double u_f_generic(const ConvexGenerator& f, double x);

// u_{f,c}(x) = inf{ b in [c, 1] : phi_f(c, b) >= x }, bisection on [c, 1].
double u_f_c(const ConvexGenerator& f, double c, double x);

}  // namespace bayesbound

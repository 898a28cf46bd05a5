#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bayesbound/distribution.hpp"
#include "bayesbound/gaussian.hpp"
#include "bayesbound/generator.hpp"
#include "bayesbound/rng.hpp"
#include "test_oracles.hpp"

using namespace bayesbound;

TEST_CASE("power generator cases") {
  auto kl = power_generator(1.0);
  CHECK(kl.evaluate(1.0) == doctest::Approx(0.0));
  CHECK(kl.evaluate(2.0) == doctest::Approx(2.0 * std::log(2.0)));
  CHECK(kl.at_zero == doctest::Approx(0.0));
  CHECK(is_pos_inf(kl.slope_at_infinity));

  auto chi2 = power_generator(2.0);
  CHECK(chi2.evaluate(2.0) == doctest::Approx(3.0));
  CHECK(chi2.at_zero == doctest::Approx(-1.0));

  auto hell = power_generator(0.5);
  CHECK(hell.evaluate(4.0) == doctest::Approx(-1.0));
  CHECK(hell.at_zero == doctest::Approx(1.0));
  CHECK(hell.slope_at_infinity == doctest::Approx(0.0));

  auto rkl = power_generator(0.0);
  CHECK(rkl.evaluate(2.0) == doctest::Approx(-std::log(2.0)));

  auto f3 = power_generator(3.0);
  CHECK(f3.evaluate(2.0) == doctest::Approx(7.0));
  auto fm1 = power_generator(-1.0);
  CHECK(fm1.evaluate(2.0) == doctest::Approx(-0.5));
}

TEST_CASE("tv and tsybakov generators") {
  auto tv = tv_generator();
  CHECK(tv.evaluate(1.0) == doctest::Approx(0.0));
  CHECK(tv.evaluate(3.0) == doctest::Approx(1.0));
  CHECK(tv.at_zero == doctest::Approx(0.5));
  CHECK(tv.slope_at_infinity == doctest::Approx(0.5));

  auto ts = tsybakov_generator(2.0);
  CHECK(ts.evaluate(1.0) == doctest::Approx(0.0));
  CHECK(ts.evaluate(3.0) == doctest::Approx(-1.0));
  CHECK(ts.slope_at_infinity == doctest::Approx(0.0));
  auto ts_half = tsybakov_generator(0.5);
  CHECK(ts_half.at_zero == doctest::Approx(0.5));
  CHECK_THROWS_AS(tsybakov_generator(0.0), std::invalid_argument);
  CHECK_THROWS_AS(tsybakov_generator(-1.0), std::invalid_argument);
}

TEST_CASE("generator spot check accepts the built-ins") {
  std::string why;
  CHECK(spot_check_generator(kl_generator(), &why));
  CHECK(spot_check_generator(chi2_generator(), &why));
  CHECK(spot_check_generator(tv_generator(), &why));
  CHECK(spot_check_generator(hellinger_generator(), &why));
  CHECK(spot_check_generator(tsybakov_generator(2.0), &why));
  ConvexGenerator bad;
  bad.evaluate = [](double x) { return std::sin(3.0 * x); };  // not convex, f(1) != 0
  bad.label = "bad";
  CHECK_FALSE(spot_check_generator(bad, &why));
}

TEST_CASE("discrete f-divergence examples and boundary conventions") {
  DiscreteDistribution p({0.3, 0.7});
  CHECK(f_divergence(kl_generator(), p, p) == doctest::Approx(0.0));

  DiscreteDistribution point({1.0, 0.0});
  DiscreteDistribution half({0.5, 0.5});
  CHECK(f_divergence(chi2_generator(), point, half) == doctest::Approx(1.0));

  DiscreteDistribution e1({1.0, 0.0});
  DiscreteDistribution e2({0.0, 1.0});
  CHECK(is_pos_inf(f_divergence(kl_generator(), e1, e2)));
  // TV has finite slope at infinity: support violations stay finite.
  CHECK(f_divergence(tv_generator(), e1, e2) == doctest::Approx(1.0));
  // Hellinger f_{1/2}: f'(inf) = 0, so the q=0 part contributes nothing.
  CHECK(f_divergence(hellinger_generator(), e1, e2) == doctest::Approx(1.0));
}

TEST_CASE("hellinger squared identity") {
  DiscreteDistribution p({0.5, 0.5});
  DiscreteDistribution q({0.98, 0.02});
  const double h2 = hellinger_sq(p, q);
  CHECK(h2 == doctest::Approx(2.0 - 2.0 * (std::sqrt(0.49) + std::sqrt(0.01))).epsilon(1e-12));
  CHECK(h2 == doctest::Approx(2.0 * f_divergence(hellinger_generator(), p, q)).epsilon(1e-12));
  DiscreteDistribution e1({1.0, 0.0});
  DiscreteDistribution e2({0.0, 1.0});
  CHECK(hellinger_sq(e1, e2) == doctest::Approx(2.0));
  CHECK(hellinger_sq(p, p) == doctest::Approx(0.0));
}

TEST_CASE("gaussian kl closed forms") {
  GaussianSpec a = GaussianSpec::spherical(Eigen::VectorXd::Zero(1), 1.0);
  CHECK(gaussian_kl(a, a) == doctest::Approx(0.0));
  GaussianSpec b = GaussianSpec::spherical(Eigen::VectorXd::Ones(1), 1.0);
  CHECK(gaussian_kl(a, b) == doctest::Approx(0.5));
  Eigen::VectorXd m(2);
  m << 3.0, 4.0;
  GaussianSpec c = GaussianSpec::spherical(Eigen::VectorXd::Zero(2), 25.0);
  GaussianSpec d = GaussianSpec::spherical(m, 25.0);
  CHECK(gaussian_kl(c, d) == doctest::Approx(0.5));
}

TEST_CASE("gaussian chi2 location vs quadrature oracle") {
  Eigen::VectorXd t1(1), t2(1);
  t1 << 0.0;
  t2 << 1.0;
  CHECK(gaussian_chi2_location(t1, t1, 1.0) == doctest::Approx(0.0));
  const double closed = gaussian_chi2_location(t1, t2, 1.0);
  CHECK(closed == doctest::Approx(M_E - 1.0).epsilon(1e-12));
  // Independent check: chi^2 = int p^2/q - 1 by quadrature.
  const double quad = testoracle::quad_1d(
      [](double x) {
        const double p = testoracle::normal_pdf(x, 0.0, 1.0);
        const double q = testoracle::normal_pdf(x, 1.0, 1.0);
        return p * p / q;
      },
      -12.0, 13.0) - 1.0;
  CHECK(closed == doctest::Approx(quad).epsilon(1e-6));
}

TEST_CASE("gaussian chi2 covariance bound") {
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
  CHECK(gaussian_chi2_covariance(id, id) == doctest::Approx(0.0));
  Eigen::MatrixXd s2 = id;
  s2(0, 0) = 1.1;
  // ||S1-S2||_F^2 = 0.01, lmin(S2) = 1.
  CHECK(gaussian_chi2_covariance(id, s2) == doctest::Approx(std::expm1(0.01)).epsilon(1e-12));

  // Bound dominates the exact chi^2 computed by 2-D quadrature.
  Eigen::MatrixXd s1(2, 2), sb(2, 2);
  s1 << 1.05, 0.02, 0.02, 0.98;
  sb << 1.0, 0.0, 0.0, 1.0;
  const double bound = gaussian_chi2_covariance(s1, sb);
  const Eigen::MatrixXd s1i = s1.inverse();
  const double det1 = s1.determinant();
  auto pdf = [&](const Eigen::MatrixXd& inv, double det, double x, double y) {
    Eigen::Vector2d v(x, y);
    return std::exp(-0.5 * v.dot(inv * v)) / (2.0 * M_PI * std::sqrt(det));
  };
  const double exact = testoracle::quad_2d(
      [&](double x, double y) {
        const double p = pdf(s1i, det1, x, y);
        const double q = pdf(sb, 1.0, x, y);
        return p * p / q;
      },
      -10.0, 10.0, 600) - 1.0;
  CHECK(exact >= -1e-6);
  CHECK(bound >= exact - 1e-6);

  // Failing provisos are reported by name.
  Eigen::MatrixXd far = 3.0 * id;
  CHECK_THROWS_AS(gaussian_chi2_covariance(far, id), std::domain_error);
}

TEST_CASE("data processing inequality on random pairs") {
  const ConvexGenerator gens[] = {kl_generator(),    chi2_generator(),
                                  tv_generator(),    hellinger_generator(),
                                  power_generator(3.0), power_generator(-1.0)};
  CounterRng rng(77);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_u64() % 9);  // alphabet <= 10
    std::vector<double> pw(m), qw(m);
    for (double& v : pw) v = rng.exponential();
    for (double& v : qw) v = rng.exponential();
    DiscreteDistribution p = DiscreteDistribution::normalized(pw);
    DiscreteDistribution q = DiscreteDistribution::normalized(qw);
    const int mm = 1 + static_cast<int>(rng.next_u64() % m);
    std::vector<int> merge(m);
    for (auto& t : merge) t = static_cast<int>(rng.next_u64() % mm);
    for (const auto& f : gens) {
      const double before = f_divergence(f, p, q);
      const double after =
          f_divergence(f, pushforward(p, merge, mm), pushforward(q, merge, mm));
      if (std::isfinite(before)) {
        CHECK(after <= before + 1e-10);
        ++checked;
      } else {
        CHECK(after <= before);  // anything <= +inf
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("divergence skew symmetry and KL <= chi2") {
  CounterRng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> pw(4), qw(4);
    for (double& v : pw) v = rng.exponential();
    for (double& v : qw) v = rng.exponential();
    DiscreteDistribution p = DiscreteDistribution::normalized(pw);
    DiscreteDistribution q = DiscreteDistribution::normalized(qw);
    for (double alpha : {2.0, 3.0, -1.0}) {
      const double lhs = f_divergence(power_generator(alpha), p, q);
      const double rhs = f_divergence(power_generator(1.0 - alpha), q, p);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
    CHECK(f_divergence(kl_generator(), p, q) <=
          f_divergence(chi2_generator(), p, q) + 1e-10);
    CHECK(f_divergence(kl_generator(), p, p) == doctest::Approx(0.0));
    CHECK(f_divergence(tv_generator(), p, q) >= -1e-12);
  }
}

TEST_CASE("distribution validation") {
  CHECK_THROWS_AS(DiscreteDistribution({0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteDistribution({-0.1, 1.1}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteDistribution::normalized({0.0, 0.0}), std::invalid_argument);
  DiscreteDistribution p({0.25, 0.75});
  DiscreteDistribution q({0.5, 0.5, 0.0});
  CHECK_THROWS_AS(f_divergence(kl_generator(), p, q), std::invalid_argument);
}

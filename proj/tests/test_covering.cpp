#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bayesbound/covering.hpp"
#include "bayesbound/gaussian.hpp"
#include "bayesbound/models.hpp"

using namespace bayesbound;

TEST_CASE("gaussian location KL cover") {
  // Boundary sqrt(2) eps sigma = gamma gives ceil(3^d).
  for (int d : {1, 2, 3}) {
    const double gamma = 5.0, sigma = 1.0;
    const double eps = gamma / (std::sqrt(2.0) * sigma);
    CHECK(gaussian_location_kl_cover(gamma, sigma, d, eps).count ==
          doctest::Approx(std::ceil(std::pow(3.0, d))));
  }
  CHECK(gaussian_location_kl_cover(10.0, 1.0, 1, 1.0).count ==
        doctest::Approx(std::ceil(30.0 / std::sqrt(2.0))));  // 22
  CHECK(gaussian_location_kl_cover(10.0, 1.0, 1, 1e6).count == doctest::Approx(1.0));
  CHECK_THROWS_AS(gaussian_location_kl_cover(-1.0, 1.0, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_location_kl_cover(1.0, 0.0, 1, 1.0), std::invalid_argument);
}

TEST_CASE("KL cover is constructively achievable at d=1") {
  // Equally spaced centers of the returned count cover the interval:
  // sup over theta of min-center KL <= eps^2.
  const double gamma = 10.0, sigma = 1.0;
  for (double eps : {0.5, 1.0, 2.0}) {
    const double count = gaussian_location_kl_cover(gamma, sigma, 1, eps).count;
    const int m = static_cast<int>(count);
    REQUIRE(m >= 1);
    std::vector<double> centers(m);
    for (int j = 0; j < m; ++j)
      centers[j] = -gamma + (2.0 * gamma) * (j + 0.5) / m;
    double worst = 0.0;
    for (int k = 0; k <= 2000; ++k) {
      const double theta = -gamma + 2.0 * gamma * k / 2000.0;
      double best = kInf;
      for (double c : centers)
        best = std::fmin(best, (theta - c) * (theta - c) / (2.0 * sigma * sigma));
      worst = std::fmax(worst, best);
    }
    CHECK(worst <= eps * eps + 1e-9);
  }
}

TEST_CASE("gaussian location chi2 cover") {
  // eps chosen so log(1+eps^2) = d, gamma = sigma sqrt d -> ceil(3^d).
  for (int d : {1, 2, 3}) {
    const double sigma = 1.0, gamma = sigma * std::sqrt(static_cast<double>(d));
    const double eps = std::sqrt(std::expm1(static_cast<double>(d)));
    // Roundoff in sqrt(log1p(eps^2)) can push the pre-ceil value a hair
    // above the exact 3^d boundary; one extra point is the conservative
    // direction, so accept either 3^d or 3^d + 1.
    const double count = gaussian_location_chi2_cover(gamma, sigma, d, eps).count;
    const double exact = std::pow(3.0, d);
    CHECK(count >= exact - 0.5);
    CHECK(count <= exact + 1.5);
  }
  CHECK(gaussian_location_chi2_cover(10.0, 1.0, 1, std::sqrt(M_E - 1.0)).count ==
        doctest::Approx(30.0));
  CHECK(gaussian_location_chi2_cover(1.0, 1.0, 1, 1e9).count == doctest::Approx(1.0));
}

TEST_CASE("spiked covariance cover") {
  // log(1+eps^2) = d with n = d gives 36^{d/2}.
  for (int d : {2, 4}) {
    const double eps = std::sqrt(std::expm1(static_cast<double>(d)));
    CHECK(spiked_covariance_chi2_cover(d, d, eps).count ==
          doctest::Approx(std::ceil(std::pow(36.0, d / 2.0))));
  }
  // The paper's operating point log(1+eps^2) = min(n/2, d).
  {
    const int n = 64, d = 8;
    const double eps = std::sqrt(std::expm1(std::fmin(n / 2.0, static_cast<double>(d))));
    const double count = spiked_covariance_chi2_cover(n, d, eps).count;
    CHECK(count ==
          doctest::Approx(std::ceil(std::pow(36.0 * n / std::fmin(n / 2.0, double(d)), d / 2.0))));
  }
  // Proviso violations error out.
  CHECK_THROWS_AS(spiked_covariance_chi2_cover(1, 8, 1.0), std::domain_error);
  const double too_big = std::sqrt(std::expm1(4.0 * 2 + 1.0));
  CHECK_THROWS_AS(spiked_covariance_chi2_cover(2, 2, too_big), std::domain_error);
}

TEST_CASE("covering counts are monotone in eps") {
  double prev = kInf;
  for (double eps = 0.1; eps <= 20.0; eps *= 1.5) {
    const double c = gaussian_location_kl_cover(10.0, 1.0, 2, eps).count;
    CHECK(c <= prev);
    prev = c;
  }
  prev = kInf;
  for (double eps = 0.5; eps <= 50.0; eps *= 1.5) {
    const double c = gaussian_location_chi2_cover(10.0, 1.0, 2, eps).count;
    CHECK(c <= prev);
    prev = c;
  }
}

TEST_CASE("greedy cover of finite families") {
  DiscreteProblem same = make_no_data(4, 3);
  CHECK(greedy_cover_finite(kl_generator(), same.channel, 0.5).count == doctest::Approx(1.0));

  DiscreteProblem p = make_random(4, 5, 3, true, 99);
  double max_pair = 0.0;
  for (const auto& a : p.channel)
    for (const auto& b : p.channel)
      max_pair = std::fmax(max_pair, f_divergence(kl_generator(), a, b));
  CHECK(greedy_cover_finite(kl_generator(), p.channel, std::sqrt(max_pair) + 0.01).count ==
        doctest::Approx(1.0));

  // Four mutually distant rows at eps^2 below the separation: no merging.
  std::vector<DiscreteDistribution> rows = {
      DiscreteDistribution({0.85, 0.05, 0.05, 0.05}),
      DiscreteDistribution({0.05, 0.85, 0.05, 0.05}),
      DiscreteDistribution({0.05, 0.05, 0.85, 0.05}),
      DiscreteDistribution({0.05, 0.05, 0.05, 0.85})};
  CHECK(greedy_cover_finite(kl_generator(), rows, std::sqrt(0.5)).count == doctest::Approx(4.0));
  // Certified: a cover at generous eps always has count <= N.
  CHECK(greedy_cover_finite(chi2_generator(), rows, 1.0).count <= 4.0);
}

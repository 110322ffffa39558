#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include "srt/ors_exact.hpp"
#include "srt/ors_iid.hpp"

using namespace srt;

namespace {
double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}
}  // namespace

TEST_CASE("identical-gain outage values", "[ors-iid]") {
  CHECK(iid_outage(1, 1.0, 0.1) == Approx(0.18126924692201814).epsilon(1e-14));
  CHECK(iid_outage(2, 1.0, 0.1) == Approx(0.032858539879675583).epsilon(1e-14));
  CHECK(iid_outage(5, 2.0, 0.0) == 0.0);
  CHECK_THROWS_AS(iid_outage(0, 1.0, 0.1), std::domain_error);
}

TEST_CASE("identical-gain intercept values", "[ors-iid]") {
  CHECK(iid_intercept(1, 1.0, 1.0, 0.1) == Approx(0.98274995043222357).epsilon(1e-14));
  CHECK(iid_intercept(2, 1.0, 1.0, 0.1) == Approx(0.99016430818240899).epsilon(1e-14));
  CHECK(iid_intercept(3, 1.0, 0.5, 0.0) == 1.0);
}

TEST_CASE("fast path equals exact enumeration", "[ors-iid]") {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto logu = [&](double lo, double hi) {
    return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * unif(gen));
  };
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 30; ++rep) {
      const double sigma_m2 = logu(0.1, 10.0);
      const double mer = logu(0.1, 30.0);
      const double delta = sigma_m2 * logu(0.01, 3.0);
      const IidProfile iid(sigma_m2, sigma_m2 / mer, n);
      const ChannelProfile general = iid.expand();
      worst = std::max(worst, rel_err(iid_outage(n, sigma_m2, delta), ors_outage(general, delta)));
      worst = std::max(worst, rel_err(iid_intercept(n, sigma_m2, sigma_m2 / mer, delta),
                                      ors_intercept(general, delta)));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("collapsing identity (1-u)^n (1+u)^n = (1-u^2)^n", "[ors-iid]") {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int rep = 0; rep < 200; ++rep) {
    const double u = unif(gen);
    const int n = 1 + static_cast<int>(gen() % 10);
    const double lhs = std::pow(1.0 - u, n) * std::pow(1.0 + u, n);
    const double rhs = std::pow(1.0 - u * u, n);
    REQUIRE(rel_err(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("finite-N relation reproduces the direct evaluation", "[ors-iid]") {
  // consistency identity: feed the closed-form outage back through theta
  const double p_out_2 = iid_outage(2, 1.0, 0.1);
  CHECK(intercept_from_outage_finite(p_out_2, 2, 1.0) ==
        Approx(0.99016430818240899).epsilon(1e-12));
  const double p_out_1 = iid_outage(1, 1.0, 0.1);
  CHECK(intercept_from_outage_finite(p_out_1, 1, 1.0) ==
        Approx(0.98274995043222357).epsilon(1e-12));

  std::mt19937_64 gen(43);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto logu = [&](double lo, double hi) {
    return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * unif(gen));
  };
  double worst = 0.0;
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 1 + static_cast<int>(gen() % 10);
    const double sigma_m2 = logu(0.1, 10.0);
    const double mer = logu(0.1, 30.0);
    const double delta = sigma_m2 * logu(0.01, 3.0);
    const double via_theta =
        intercept_from_outage_finite(iid_outage(n, sigma_m2, delta), n, mer);
    const double direct = iid_intercept(n, sigma_m2, sigma_m2 / mer, delta);
    worst = std::max(worst, rel_err(via_theta, direct));
  }
  CHECK(worst <= 1e-10);

  // p_out -> 1 means theta -> 0 and a vanishing intercept level
  CHECK(intercept_from_outage_finite(0.999999, 2, 1.0) < 1e-2);
  CHECK_THROWS_AS(intercept_from_outage_finite(0.0, 2, 1.0), std::domain_error);
  CHECK_THROWS_AS(intercept_from_outage_finite(1.0, 2, 1.0), std::domain_error);
}

TEST_CASE("finite-N relation is strictly decreasing in the outage level", "[ors-iid]") {
  for (const double mer : {0.5, 1.0, 3.1622776601683795, 10.0}) {
    for (const int n : {1, 2, 4, 16}) {
      double prev = 2.0;
      for (double p = 1e-6; p < 1.0; p *= 3.0) {
        const double cur = intercept_from_outage_finite(std::min(p, 0.99), n, mer);
        REQUIRE(cur < prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("asymptotic intercept values", "[ors-iid]") {
  CHECK(intercept_asymptotic(0.1, 10, 10.0) == Approx(0.00073590787695982068).epsilon(1e-12));
  // mer = 2 collapses to 2x - x^2
  const double x = theta_from_outage(0.3, 4);
  CHECK(intercept_asymptotic(0.3, 4, 2.0) == Approx(2.0 * x - x * x).epsilon(1e-13));
  // fixed outage level, growing N: tends to zero
  double prev = 1.0;
  for (int n = 1; n <= 1000000; n *= 10) {
    const double cur = intercept_asymptotic(0.1, n, 3.0);
    REQUIRE(cur < prev);
    prev = cur;
  }
  CHECK(prev < 1e-8);
}

TEST_CASE("asymptotic outage values and round trip", "[ors-iid]") {
  const double mer = 3.1622776601683795;
  CHECK(outage_from_intercept_asymptotic(0.1, 10, mer) ==
        Approx(0.19034786496662995).epsilon(1e-12));
  CHECK(outage_from_intercept_asymptotic(0.1, 100, mer) ==
        Approx(6.2442473645409497e-8).epsilon(1e-11));

  std::mt19937_64 gen(44);
  std::uniform_real_distribution<double> unif(0.01, 0.99);
  for (int rep = 0; rep < 200; ++rep) {
    const double p = unif(gen);
    const int n = 1 + static_cast<int>(gen() % 50);
    const double m = 0.2 + 20.0 * unif(gen);
    const double back = intercept_asymptotic(outage_from_intercept_asymptotic(p, n, m), n, m);
    REQUIRE(rel_err(back, p) <= 1e-12);
  }
}

TEST_CASE("asymptotic form dominates for large N", "[ors-iid]") {
  // the gap is the empty-set term, so it sits inside the (1 - sqrt(theta))^n
  // envelope and vanishes as n grows
  const double p_out = 0.1;
  const double mer = 3.1622776601683795;
  double last_gap = 1.0;
  for (const int n : {1, 2, 4, 8, 16, 32, 64, 128, 256, 512}) {
    const double theta = theta_from_outage(p_out, n);
    const double envelope = std::exp(n * std::log1p(-std::sqrt(theta)));
    last_gap = std::abs(intercept_from_outage_finite(p_out, n, mer) -
                        intercept_asymptotic(p_out, n, mer));
    REQUIRE(last_gap <= envelope + 1e-18);
  }
  CHECK(last_gap < 1e-12);
}

TEST_CASE("solver inverts the finite-N relation", "[ors-iid]") {
  std::mt19937_64 gen(45);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    const double target = 0.001 + 0.998 * unif(gen);
    const int n = 1 + static_cast<int>(gen() % 64);
    const double mer = 0.2 + 20.0 * unif(gen);
    const double p_out = solve_outage_given_intercept_finite(target, n, mer, 1e-12);
    REQUIRE(p_out > 0.0);
    REQUIRE(p_out < 1.0);
    REQUIRE(std::abs(intercept_from_outage_finite(p_out, n, mer) - target) <= 1e-12);
  }
}

TEST_CASE("solver endpoints and errors", "[ors-iid]") {
  // target near one forces theta near one and a tiny outage level
  CHECK(solve_outage_given_intercept_finite(0.999999, 4, 2.0, 1e-12) < 1e-3);
  CHECK_THROWS_AS(solve_outage_given_intercept_finite(0.0, 4, 2.0, 1e-12), std::domain_error);
  CHECK_THROWS_AS(solve_outage_given_intercept_finite(1.0, 4, 2.0, 1e-12), std::domain_error);
  CHECK_THROWS_AS(solve_outage_given_intercept_finite(0.5, 0, 2.0, 1e-12), std::domain_error);
  CHECK_THROWS_AS(solve_outage_given_intercept_finite(0.5, 4, 2.0, 0.0), std::domain_error);
}

TEST_CASE("solver agrees with the asymptotic inversion at large N", "[ors-iid]") {
  const double mer = 3.1622776601683795;  // 5 dB
  const double solved = solve_outage_given_intercept_finite(0.1, 100, mer, 1e-12);
  const double asym = outage_from_intercept_asymptotic(0.1, 100, mer);
  CHECK(rel_err(solved, asym) < 0.01);
}

TEST_CASE("theta round trip", "[ors-iid]") {
  std::mt19937_64 gen(46);
  std::uniform_real_distribution<double> unif(0.01, 0.99);
  for (int rep = 0; rep < 100; ++rep) {
    const double p_out = unif(gen);
    const int n = 1 + static_cast<int>(gen() % 30);
    const double theta = theta_from_outage(p_out, n);
    const double back = theta < 1.0 ? std::exp(n * std::log1p(-theta)) : 0.0;
    REQUIRE(rel_err(back, p_out) <= 1e-12);
  }
}

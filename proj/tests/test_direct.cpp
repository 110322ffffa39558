#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "srt/direct.hpp"

using namespace srt;

namespace {
double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}
}  // namespace

TEST_CASE("intercept probability values", "[direct]") {
  CHECK(dt_intercept(1.0, 0.0) == 1.0);
  CHECK(dt_intercept(1.0, std::log(2.0)) == Approx(0.5).epsilon(1e-14));
  // frozen: exp(-1/2)
  CHECK(dt_intercept(2.0, 1.0) == Approx(0.60653065971263342).epsilon(1e-14));
  CHECK_THROWS_AS(dt_intercept(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(dt_intercept(1.0, -0.5), std::domain_error);
}

TEST_CASE("intercept probability against sampling oracle", "[direct][oracle]") {
  const std::uint64_t trials = 2'000'000;
  const auto c = oracle::dt_counts(1.0, 2.0, 1.0, trials, 99101);
  const double p_hat = static_cast<double>(c.intercept) / static_cast<double>(trials);
  CHECK(std::abs(p_hat - 0.60653065971263342) <= oracle::band(0.6065, trials));
}

TEST_CASE("outage probability values", "[direct]") {
  CHECK(dt_outage(1.0, 0.0) == 0.0);
  CHECK(dt_outage(1.0, 1.0) == Approx(0.63212055882855768).epsilon(1e-14));
  // tiny-argument regime must not cancel: 1 - exp(-1e-9)
  CHECK(rel_err(dt_outage(1e9, 1.0), 9.999999995e-10) < 1e-12);
  CHECK(rel_err(dt_outage(1e300, 1.0), 1e-300) < 1e-12);
  CHECK_THROWS_AS(dt_outage(-1.0, 1.0), std::domain_error);
}

TEST_CASE("outage probability against sampling oracle", "[direct][oracle]") {
  const std::uint64_t trials = 2'000'000;
  const auto c = oracle::dt_counts(1.0, 2.0, 1.0, trials, 99102);
  const double p_hat = static_cast<double>(c.outage) / static_cast<double>(trials);
  CHECK(std::abs(p_hat - 0.63212055882855768) <= oracle::band(0.6321, trials));
}

TEST_CASE("tradeoff relation values", "[direct]") {
  CHECK(dt_outage_from_intercept(0.1, 1.0, 1.0) == Approx(0.9).epsilon(1e-14));
  CHECK(dt_outage_from_intercept(1.0, 3.0, 0.7) == 0.0);
  // frozen: 1 - 0.1^(1/10)
  CHECK(dt_outage_from_intercept(0.1, 1.0, 10.0) == Approx(0.2056717652757185).epsilon(1e-14));
  CHECK(dt_outage_from_intercept(0.0, 1.0, 2.0) == 1.0);  // continuity limit
  CHECK_THROWS_AS(dt_outage_from_intercept(-0.1, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(dt_outage_from_intercept(1.5, 1.0, 1.0), std::domain_error);
}

TEST_CASE("tradeoff relation round trip", "[direct]") {
  std::mt19937_64 gen(20240117);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto logu = [&](double lo, double hi) {
    return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * unif(gen));
  };
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double sd = logu(0.05, 20.0);
    const double se = logu(0.05, 20.0);
    const double alpha = logu(1e-3, 5.0);
    const double direct = dt_outage(sd, alpha);
    const double via_relation = dt_outage_from_intercept(dt_intercept(se, alpha), se, sd);
    worst = std::max(worst, rel_err(direct, via_relation));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("tradeoff is strictly decreasing in the intercept level", "[direct]") {
  const double se = 1.3;
  const double sd = 4.0;
  double prev = dt_outage_from_intercept(1e-6, se, sd);
  for (double p = 1e-5; p < 1.0; p *= 2.5) {
    const double cur = dt_outage_from_intercept(std::min(p, 0.999), se, sd);
    REQUIRE(cur < prev);
    prev = cur;
  }
}

TEST_CASE("tradeoff depends only on the gain ratio", "[direct]") {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> unif(0.01, 0.99);
  for (int k = 0; k < 200; ++k) {
    const double p = unif(gen);
    const double scale = 0.1 + 30.0 * unif(gen);
    const double a = dt_outage_from_intercept(p, 0.7, 2.1);
    const double b = dt_outage_from_intercept(p, 0.7 * scale, 2.1 * scale);
    REQUIRE(rel_err(a, b) < 1e-12);
  }
}

TEST_CASE("intercept from outage inverts the relation", "[direct]") {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> unif(0.01, 0.99);
  for (int k = 0; k < 200; ++k) {
    const double p_int = unif(gen);
    const double p_out = dt_outage_from_intercept(p_int, 0.8, 2.5);
    REQUIRE(rel_err(dt_intercept_from_outage(p_out, 0.8, 2.5), p_int) < 1e-12);
  }
}

TEST_CASE("dt pair from a system config", "[direct]") {
  const SystemConfig config(1.0, 1.0);  // alpha = 1
  const DtSrtResult r = dt_srt(config, 1.0, 2.0);
  CHECK(r.p_out == Approx(0.63212055882855768).epsilon(1e-14));
  CHECK(r.p_int == Approx(0.60653065971263342).epsilon(1e-14));
}

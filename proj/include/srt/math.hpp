#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace srt {

inline constexpr double kSqrt2 = 1.4142135623730951;
inline constexpr double kSqrt2Pi = 2.5066282746310002;

// 1 - exp(-x), stable for small x.
inline double one_minus_exp_neg(double x) { return -std::expm1(-x); }

// Neumaier-compensated accumulator. Deterministic for a fixed add order.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      c_ += (sum_ - t) + v;
    } else {
      c_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

// x^e for x in [0,1], e >= 0. Falls back to log-domain evaluation once x
// approaches the subnormal range, where pow loses accuracy.
inline double pow_unit(double x, double e) {
  if (e == 0.0) return 1.0;
  if (x <= 0.0) return 0.0;
  if (x < 1e-280) return std::exp(e * std::log(x));
  return std::pow(x, e);
}

// Inverse standard normal CDF. Acklam's rational approximation polished with
// one Halley step against std::erfc; relative error is near machine epsilon.
inline double inv_norm_cdf(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("inv_norm_cdf: p must lie in (0,1)");
  }
  static constexpr double a[] = {-39.69683028665376, 220.9460984245205,
                                 -275.9285104469687, 138.3577518672690,
                                 -30.66479806614716, 2.506628277459239};
  static constexpr double b[] = {-54.47609879822406, 161.5858368580409,
                                 -155.6989798598866, 66.80131188771972,
                                 -13.28068155288572};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838, -2.549732539343734,
                                 4.374664141464968, 2.938163982698783};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996, 3.754408661907416};
  constexpr double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  const double err = 0.5 * std::erfc(-x / kSqrt2) - p;
  const double u = err * kSqrt2Pi * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace srt

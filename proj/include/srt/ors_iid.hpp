#pragma once

#include <cmath>
#include <stdexcept>

#include "srt/math.hpp"
#include "srt/model.hpp"

namespace srt {

// Closed forms for the identically distributed case (common main gain
// sigma_m2, common wiretap gain sigma_e2), the finite-N tradeoff relation in
// theta = 1 - p_out^(1/N), and its large-N limits.

namespace detail {
inline void check_n_relays(int n) {
  if (n < 1) throw std::domain_error("n_relays must be >= 1");
}
inline void check_open_unit(double p, const char* what) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error(std::string(what) + " must lie in (0,1)");
  }
}
inline void check_mer(double mer) {
  if (!(std::isfinite(mer) && mer > 0.0)) {
    throw std::domain_error("mer must be finite and > 0");
  }
}
}  // namespace detail

/// Outage probability: [1 - exp(-2 delta / sigma_m2)]^n.
inline double iid_outage(int n, double sigma_m2, double delta) {
  detail::check_n_relays(n);
  detail::check_gain(sigma_m2, "sigma_m2");
  detail::check_delta(delta);
  return std::pow(one_minus_exp_neg(2.0 * delta / sigma_m2), n);
}

/// Intercept probability, split over the empty / non-empty decoding set.
inline double iid_intercept(int n, double sigma_m2, double sigma_e2, double delta) {
  detail::check_n_relays(n);
  detail::check_gain(sigma_m2, "sigma_m2");
  detail::check_gain(sigma_e2, "sigma_e2");
  detail::check_delta(delta);
  const double p_empty = std::pow(one_minus_exp_neg(delta / sigma_m2), n);
  const double u = std::exp(-delta / sigma_e2);
  const double two_copy = 2.0 * u - u * u;  // better of source and relay copy
  return p_empty * u + (1.0 - p_empty) * two_copy;
}

/// theta = 1 - p_out^(1/n), evaluated without cancellation.
inline double theta_from_outage(double p_out, int n) {
  detail::check_open_unit(p_out, "p_out");
  detail::check_n_relays(n);
  return -std::expm1(std::log(p_out) / n);
}

/// Finite-N intercept probability as a function of theta.
inline double intercept_from_theta(double theta, int n, double mer) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw std::domain_error("theta must lie in [0,1]");
  }
  detail::check_n_relays(n);
  detail::check_mer(mer);
  const double root = std::sqrt(theta);
  const double empty_w = root < 1.0 ? std::exp(n * std::log1p(-root)) : 0.0;
  const double u = pow_unit(theta, 0.5 * mer);
  const double um = pow_unit(theta, mer);
  return empty_w * u + (1.0 - empty_w) * (2.0 * u - um);
}

/// Finite-N tradeoff relation: intercept probability at a given outage level.
inline double intercept_from_outage_finite(double p_out, int n, double mer) {
  return intercept_from_theta(theta_from_outage(p_out, n), n, mer);
}

/// Large-N intercept probability at a given outage level (empty-set term dropped).
inline double intercept_asymptotic(double p_out, int n, double mer) {
  detail::check_mer(mer);
  const double x = theta_from_outage(p_out, n);
  return 2.0 * pow_unit(x, 0.5 * mer) - pow_unit(x, mer);
}

/// Large-N outage probability at a given intercept level.
inline double outage_from_intercept_asymptotic(double p_int, int n, double mer) {
  detail::check_open_unit(p_int, "p_int");
  detail::check_n_relays(n);
  detail::check_mer(mer);
  const double s = std::sqrt(1.0 - p_int);
  const double w = p_int / (1.0 + s);  // 1 - sqrt(1 - p_int), cancellation-free
  const double y = pow_unit(w, 2.0 / mer);
  return y < 1.0 ? std::exp(n * std::log1p(-y)) : 0.0;
}

class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numeric inversion of the finite-N relation: the outage level whose intercept
// probability equals the target. Bisection on theta in (0,1); the relation is
// strictly increasing in theta, which is asserted on a coarse grid before
// iterating. 200-iteration cap.
inline double solve_outage_given_intercept_finite(double p_int_target, int n, double mer,
                                                  double tol) {
  detail::check_open_unit(p_int_target, "p_int_target");
  detail::check_n_relays(n);
  detail::check_mer(mer);
  if (!(std::isfinite(tol) && tol > 0.0)) {
    throw std::domain_error("tol must be finite and > 0");
  }

  double prev = 0.0;
  for (int k = 1; k <= 32; ++k) {
    const double f = intercept_from_theta(k / 33.0, n, mer);
    if (f + 1e-15 < prev) {
      throw std::logic_error("tradeoff relation is not monotone on the bracket");
    }
    prev = f;
  }

  double lo = 0.0;          // intercept -> 0
  double hi = 1.0;          // intercept -> 1
  double mid = 0.5;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    mid = 0.5 * (lo + hi);
    if (intercept_from_theta(mid, n, mer) < p_int_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  mid = 0.5 * (lo + hi);
  const double residual = std::abs(intercept_from_theta(mid, n, mer) - p_int_target);
  if (residual > tol) {
    throw infeasible_error("no outage level meets the intercept target within tolerance");
  }
  return mid < 1.0 ? std::exp(n * std::log1p(-mid)) : 0.0;  // (1 - theta)^n
}

}  // namespace srt

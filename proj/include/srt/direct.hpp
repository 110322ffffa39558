#pragma once

#include <cmath>
#include <stdexcept>

#include "srt/model.hpp"

namespace srt {

// Closed forms for direct source->destination transmission under an
// eavesdropper, Rayleigh fading on both links.

/// Probability that the wiretap link supports the data rate: exp(-alpha/sigma).
inline double dt_intercept(double sigma_se2, double alpha) {
  detail::check_gain(sigma_se2, "sigma_se2");
  detail::check_delta(alpha);
  return std::exp(-alpha / sigma_se2);
}

/// Probability that the main link fails to support the data rate.
inline double dt_outage(double sigma_sd2, double alpha) {
  detail::check_gain(sigma_sd2, "sigma_sd2");
  detail::check_delta(alpha);
  return one_minus_exp_neg(alpha / sigma_sd2);
}

// Tradeoff relation between the two probabilities. Depends only on the gain
// ratio, not on transmit power or rate. p_int = 0 maps to 1 (continuity
// limit: 0^x = 0 for x > 0).
inline double dt_outage_from_intercept(double p_int, double sigma_se2, double sigma_sd2) {
  if (!(p_int >= 0.0 && p_int <= 1.0)) {
    throw std::domain_error("p_int must lie in [0,1]");
  }
  detail::check_gain(sigma_se2, "sigma_se2");
  detail::check_gain(sigma_sd2, "sigma_sd2");
  if (p_int == 0.0) return 1.0;
  return -std::expm1((sigma_se2 / sigma_sd2) * std::log(p_int));
}

/// Inverse direction of the tradeoff relation: (1 - p_out)^(sigma_sd2/sigma_se2).
inline double dt_intercept_from_outage(double p_out, double sigma_se2, double sigma_sd2) {
  if (!(p_out >= 0.0 && p_out <= 1.0)) {
    throw std::domain_error("p_out must lie in [0,1]");
  }
  detail::check_gain(sigma_se2, "sigma_se2");
  detail::check_gain(sigma_sd2, "sigma_sd2");
  if (p_out == 1.0) return 0.0;
  return std::exp((sigma_sd2 / sigma_se2) * std::log1p(-p_out));
}

struct DtSrtResult {
  double p_out;
  double p_int;
};

inline DtSrtResult dt_srt(const SystemConfig& config, double sigma_sd2, double sigma_se2) {
  const double alpha = alpha_threshold(config.rate, config.snr);
  return DtSrtResult{dt_outage(sigma_sd2, alpha), dt_intercept(sigma_se2, alpha)};
}

}  // namespace srt

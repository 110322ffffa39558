#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "srt/math.hpp"

namespace srt {

inline double linear_from_db(double db) {
  if (!std::isfinite(db)) throw std::domain_error("dB value must be finite");
  return std::pow(10.0, db / 10.0);
}

inline double db_from_linear(double x) {
  if (!(std::isfinite(x) && x > 0.0)) {
    throw std::domain_error("linear value must be finite and > 0");
  }
  return 10.0 * std::log10(x);
}

/// Main-to-eavesdropper ratio, dB in, linear out.
inline double mer_from_db(double db) { return linear_from_db(db); }

namespace detail {
inline void check_rate(double rate) {
  if (!(std::isfinite(rate) && rate >= 0.0)) {
    throw std::domain_error("rate must be finite and >= 0");
  }
}
inline void check_snr(double snr) {
  if (!(std::isfinite(snr) && snr > 0.0)) {
    throw std::domain_error("snr must be finite and > 0");
  }
}
inline void check_gain(double g, const char* what) {
  if (!(std::isfinite(g) && g > 0.0)) {
    throw std::domain_error(std::string(what) + " must be finite and > 0");
  }
}
inline void check_delta(double delta) {
  if (!(std::isfinite(delta) && delta >= 0.0)) {
    throw std::domain_error("threshold must be finite and >= 0");
  }
}
}  // namespace detail

/// Decoding threshold of the single-slot direct link: (2^rate - 1) / snr.
inline double alpha_threshold(double rate, double snr) {
  detail::check_rate(rate);
  detail::check_snr(snr);
  return std::expm1(rate * std::numbers::ln2) / snr;
}

/// Decoding threshold of the two-slot relayed link: (2^(2 rate) - 1) / snr.
inline double delta_threshold(double rate, double snr) {
  detail::check_rate(rate);
  detail::check_snr(snr);
  return std::expm1(2.0 * rate * std::numbers::ln2) / snr;
}

// Transmission parameters. Rate in bits/s/Hz, SNR stored linear; dB is
// converted once at the configuration boundary.
struct SystemConfig {
  double rate;
  double snr;

  SystemConfig(double rate_, double snr_) : rate(rate_), snr(snr_) {
    detail::check_rate(rate);
    detail::check_snr(snr);
  }

  static SystemConfig from_power(double rate_, double power, double noise) {
    detail::check_gain(power, "power");
    detail::check_gain(noise, "noise");
    return SystemConfig(rate_, power / noise);
  }
};

struct Thresholds {
  double alpha;  // single-slot
  double delta;  // two-slot
};

inline Thresholds thresholds_for(const SystemConfig& c) {
  return Thresholds{alpha_threshold(c.rate, c.snr), delta_threshold(c.rate, c.snr)};
}

// Subset of relay indices that decoded the source signal. Bitmask semantics,
// relay i <-> bit i; at most 32 relays representable (the exact-enumeration
// path caps far below that).
class DecodingSet {
 public:
  constexpr DecodingSet() = default;
  explicit constexpr DecodingSet(std::uint32_t mask) : mask_(mask) {}

  static constexpr DecodingSet full(int n) {
    return DecodingSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1u));
  }

  constexpr bool contains(int i) const { return (mask_ >> i) & 1u; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr std::uint32_t mask() const { return mask_; }
  constexpr DecodingSet with(int i) const { return DecodingSet(mask_ | (std::uint32_t{1} << i)); }
  constexpr DecodingSet without(int i) const { return DecodingSet(mask_ & ~(std::uint32_t{1} << i)); }
  friend constexpr bool operator==(DecodingSet a, DecodingSet b) { return a.mask_ == b.mask_; }

 private:
  std::uint32_t mask_ = 0;
};

// Per-link average channel gains. All entries strictly positive; the three
// per-relay lists share one length N (N = 0 is allowed and means the decoding
// set is always empty).
struct ChannelProfile {
  double sigma_sd2;
  double sigma_se2;
  std::vector<double> sigma_si2;
  std::vector<double> sigma_id2;
  std::vector<double> sigma_ie2;

  ChannelProfile(double sd2, double se2, std::vector<double> si2, std::vector<double> id2,
                 std::vector<double> ie2)
      : sigma_sd2(sd2),
        sigma_se2(se2),
        sigma_si2(std::move(si2)),
        sigma_id2(std::move(id2)),
        sigma_ie2(std::move(ie2)) {
    detail::check_gain(sigma_sd2, "sigma_sd2");
    detail::check_gain(sigma_se2, "sigma_se2");
    if (sigma_si2.size() != sigma_id2.size() || sigma_si2.size() != sigma_ie2.size()) {
      throw std::invalid_argument("per-relay gain lists must have equal length");
    }
    for (double g : sigma_si2) detail::check_gain(g, "sigma_si2 entry");
    for (double g : sigma_id2) detail::check_gain(g, "sigma_id2 entry");
    for (double g : sigma_ie2) detail::check_gain(g, "sigma_ie2 entry");
  }

  int relay_count() const { return static_cast<int>(sigma_si2.size()); }
};

// Identically distributed special case: one common main-link gain and one
// common wiretap gain across all links.
struct IidProfile {
  double sigma_m2;
  double sigma_e2;
  int n_relays;

  IidProfile(double m2, double e2, int n) : sigma_m2(m2), sigma_e2(e2), n_relays(n) {
    detail::check_gain(sigma_m2, "sigma_m2");
    detail::check_gain(sigma_e2, "sigma_e2");
    if (n_relays < 1) throw std::domain_error("n_relays must be >= 1");
  }

  double mer() const { return sigma_m2 / sigma_e2; }

  ChannelProfile expand() const {
    const auto n = static_cast<std::size_t>(n_relays);
    return ChannelProfile(sigma_m2, sigma_e2, std::vector<double>(n, sigma_m2),
                          std::vector<double>(n, sigma_m2), std::vector<double>(n, sigma_e2));
  }
};

}  // namespace srt

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "srt/math.hpp"
#include "srt/model.hpp"

namespace srt {

// Exact opportunistic-relay-selection probabilities for arbitrary per-link
// average gains, by enumeration of all 2^N decoding sets. Cost grows
// exponentially; beyond the cap callers are pointed at the i.i.d. fast path.
inline constexpr int kExactRelayCap = 20;

class capacity_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline void check_set_bounds(DecodingSet set, std::size_t n) {
  if (n < 32 && (set.mask() >> n) != 0) {
    throw std::domain_error("decoding set references a relay outside the profile");
  }
}

inline void check_relay_cap(int n) {
  if (n > kExactRelayCap) {
    throw capacity_error(
        "exact enumeration supports at most " + std::to_string(kExactRelayCap) +
        " relays; use the i.i.d. fast path (ors-iid) for larger N");
  }
}

}  // namespace detail

/// Probability that no relay decodes the source signal.
inline double pr_decoding_set_empty(std::span<const double> sigma_si2, double delta) {
  detail::check_delta(delta);
  // With no relays the decoding set is empty with certainty; the empty
  // product below returns exactly that.
  double p = 1.0;
  for (double s : sigma_si2) p *= one_minus_exp_neg(delta / s);
  return p;
}

/// Probability that exactly the relays in `set` decode the source signal.
inline double pr_decoding_set(DecodingSet set, std::span<const double> sigma_si2, double delta) {
  detail::check_set_bounds(set, sigma_si2.size());
  detail::check_delta(delta);
  if (set.empty()) {
    throw std::domain_error("pr_decoding_set requires a non-empty set");
  }
  double p = 1.0;
  for (std::size_t i = 0; i < sigma_si2.size(); ++i) {
    const double x = delta / sigma_si2[i];
    p *= set.contains(static_cast<int>(i)) ? std::exp(-x) : one_minus_exp_neg(x);
  }
  return p;
}

/// Probability that the best decoding relay still fails the relay->destination
/// hop, i.e. that every member's gain falls below the threshold.
inline double pr_best_outage(DecodingSet set, std::span<const double> sigma_id2, double delta) {
  detail::check_set_bounds(set, sigma_id2.size());
  detail::check_delta(delta);
  if (set.empty()) {
    throw std::domain_error("pr_best_outage requires a non-empty set");
  }
  double p = 1.0;
  for (std::size_t i = 0; i < sigma_id2.size(); ++i) {
    if (set.contains(static_cast<int>(i))) p *= one_minus_exp_neg(delta / sigma_id2[i]);
  }
  return p;
}

// Probability that relay i has the largest relay->destination gain within the
// set. Inclusion-exclusion over the non-empty subsets of the competitors:
//   1 + sum_A (-1)^|A| / (1 + sum_{j in A} sigma_i / sigma_j).
// The denominators are 1 plus positive sums, so coinciding gains need no
// special-casing.
inline double pr_best_is(DecodingSet set, int i, std::span<const double> sigma_id2) {
  detail::check_set_bounds(set, sigma_id2.size());
  if (!set.contains(i)) {
    throw std::domain_error("pr_best_is: relay i must belong to the set");
  }
  std::vector<int> rivals;
  rivals.reserve(static_cast<std::size_t>(set.size()));
  for (std::size_t j = 0; j < sigma_id2.size(); ++j) {
    const int jj = static_cast<int>(j);
    if (jj != i && set.contains(jj)) rivals.push_back(jj);
  }
  if (rivals.empty()) return 1.0;

  const double si = sigma_id2[static_cast<std::size_t>(i)];
  CompensatedSum acc;
  acc.add(1.0);
  const std::uint32_t subsets = std::uint32_t{1} << rivals.size();
  for (std::uint32_t k = 1; k < subsets; ++k) {
    double denom = 1.0;
    for (std::size_t b = 0; b < rivals.size(); ++b) {
      if ((k >> b) & 1u) denom += si / sigma_id2[static_cast<std::size_t>(rivals[b])];
    }
    acc.add(((std::popcount(k) & 1) ? -1.0 : 1.0) / denom);
  }
  return acc.value();
}

/// Probability that the selected relay's wiretap gain falls below the
/// threshold, averaged over which member wins the selection.
inline double pr_best_eav_below(DecodingSet set, std::span<const double> sigma_id2,
                                std::span<const double> sigma_ie2, double delta) {
  detail::check_set_bounds(set, sigma_id2.size());
  detail::check_set_bounds(set, sigma_ie2.size());
  detail::check_delta(delta);
  if (set.empty()) {
    throw std::domain_error("pr_best_eav_below requires a non-empty set");
  }
  CompensatedSum acc;
  for (std::size_t i = 0; i < sigma_ie2.size(); ++i) {
    const int ii = static_cast<int>(i);
    if (!set.contains(ii)) continue;
    acc.add(pr_best_is(set, ii, sigma_id2) * one_minus_exp_neg(delta / sigma_ie2[i]));
  }
  return acc.value();
}

// Eavesdropper success probability given a non-empty decoding set: it decodes
// from the better of its source copy and selected-relay copy. Complement form:
// 1 - Pr(source copy below) * Pr(relay copy below).
inline double pr_eav_intercept_given_set(DecodingSet set, double sigma_se2,
                                         std::span<const double> sigma_id2,
                                         std::span<const double> sigma_ie2, double delta) {
  detail::check_gain(sigma_se2, "sigma_se2");
  return 1.0 - one_minus_exp_neg(delta / sigma_se2) *
                   pr_best_eav_below(set, sigma_id2, sigma_ie2, delta);
}

// Same quantity in the expanded per-member bracket form
//   sum_i Pr(best = i) * [e^(-d/sie) + e^(-d/sse) - e^(-d/sie - d/sse)].
// Algebraically equal to the complement form; kept so the two routes can be
// checked against each other.
inline double pr_eav_intercept_given_set_expanded(DecodingSet set, double sigma_se2,
                                                  std::span<const double> sigma_id2,
                                                  std::span<const double> sigma_ie2, double delta) {
  detail::check_gain(sigma_se2, "sigma_se2");
  detail::check_set_bounds(set, sigma_id2.size());
  detail::check_set_bounds(set, sigma_ie2.size());
  detail::check_delta(delta);
  if (set.empty()) {
    throw std::domain_error("pr_eav_intercept_given_set_expanded requires a non-empty set");
  }
  const double u_se = std::exp(-delta / sigma_se2);
  CompensatedSum acc;
  for (std::size_t i = 0; i < sigma_ie2.size(); ++i) {
    const int ii = static_cast<int>(i);
    if (!set.contains(ii)) continue;
    const double u_ie = std::exp(-delta / sigma_ie2[i]);
    const double bracket = u_ie + u_se - std::exp(-delta / sigma_ie2[i] - delta / sigma_se2);
    acc.add(pr_best_is(set, ii, sigma_id2) * bracket);
  }
  return acc.value();
}

/// Outage probability of opportunistic relay selection, exact enumeration.
inline double ors_outage(const ChannelProfile& profile, double delta) {
  detail::check_delta(delta);
  const int n = profile.relay_count();
  detail::check_relay_cap(n);
  if (n == 0) return 1.0;  // no direct link in this scheme

  CompensatedSum acc;
  acc.add(pr_decoding_set_empty(profile.sigma_si2, delta));
  const std::uint32_t sets = std::uint32_t{1} << n;
  for (std::uint32_t m = 1; m < sets; ++m) {
    const DecodingSet d{m};
    acc.add(pr_decoding_set(d, profile.sigma_si2, delta) *
            pr_best_outage(d, profile.sigma_id2, delta));
  }
  return std::clamp(acc.value(), 0.0, 1.0);
}

// Intercept probability of opportunistic relay selection, exact enumeration.
// The per-set term uses the expanded per-member form: the complement form's
// final subtraction from 1 caps its absolute error near machine epsilon,
// which destroys all relative accuracy once the interception level drops
// below ~1e-13. The two forms are asserted equal in the verification suite.
inline double ors_intercept(const ChannelProfile& profile, double delta) {
  detail::check_delta(delta);
  const int n = profile.relay_count();
  detail::check_relay_cap(n);
  const double p_se = std::exp(-delta / profile.sigma_se2);
  if (n == 0) return p_se;  // only the source slot exists

  CompensatedSum acc;
  acc.add(pr_decoding_set_empty(profile.sigma_si2, delta) * p_se);
  const std::uint32_t sets = std::uint32_t{1} << n;
  for (std::uint32_t m = 1; m < sets; ++m) {
    const DecodingSet d{m};
    acc.add(pr_decoding_set(d, profile.sigma_si2, delta) *
            pr_eav_intercept_given_set_expanded(d, profile.sigma_se2, profile.sigma_id2,
                                                profile.sigma_ie2, delta));
  }
  return std::clamp(acc.value(), 0.0, 1.0);
}

}  // namespace srt

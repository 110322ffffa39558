#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "srt/math.hpp"
#include "srt/model.hpp"
#include "srt/rng.hpp"

namespace srt {

inline constexpr double kDefaultConfidence = 0.999;

// One trial's channel-gain realization. Draw order is fixed: g_sd, g_se, then
// per relay i the triple (g_si, g_id, g_ie).
struct ChannelDraw {
  double g_sd = 0.0;
  double g_se = 0.0;
  std::vector<double> g_si;
  std::vector<double> g_id;
  std::vector<double> g_ie;
};

inline void draw_channel(const ChannelProfile& profile, CounterRng& rng, ChannelDraw& out) {
  const auto n = profile.sigma_si2.size();
  out.g_si.resize(n);
  out.g_id.resize(n);
  out.g_ie.resize(n);
  out.g_sd = rng.next_exponential(profile.sigma_sd2);
  out.g_se = rng.next_exponential(profile.sigma_se2);
  for (std::size_t i = 0; i < n; ++i) {
    out.g_si[i] = rng.next_exponential(profile.sigma_si2[i]);
    out.g_id[i] = rng.next_exponential(profile.sigma_id2[i]);
    out.g_ie[i] = rng.next_exponential(profile.sigma_ie2[i]);
  }
}

inline ChannelDraw draw_channel(const ChannelProfile& profile, CounterRng& rng) {
  ChannelDraw d;
  draw_channel(profile, rng, d);
  return d;
}

/// Normal-approximation half-width z * sqrt(p(1-p)/trials) at the given
/// two-sided confidence level.
inline double confidence_interval(std::uint64_t events, std::uint64_t trials,
                                  double confidence_level) {
  if (trials < 1) throw std::domain_error("trials must be >= 1");
  if (events > trials) throw std::domain_error("events must not exceed trials");
  if (!(confidence_level > 0.0 && confidence_level < 1.0)) {
    throw std::domain_error("confidence level must lie in (0,1)");
  }
  const double z = inv_norm_cdf(0.5 * (1.0 + confidence_level));
  const double p = static_cast<double>(events) / static_cast<double>(trials);
  return z * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

struct McEstimate {
  std::uint64_t events = 0;
  std::uint64_t trials = 0;
  double p_hat = 0.0;
  double ci_half_width = 0.0;
  std::uint64_t seed = 0;

  // The plug-in half-width collapses to zero at the boundary; callers should
  // treat such intervals as uninformative rather than exact.
  bool degenerate() const { return events == 0 || events == trials; }
};

struct McPair {
  McEstimate p_out;
  McEstimate p_int;
};

// Event conventions, shared with the closed forms: outage is capacity
// strictly below the rate, intercept is capacity strictly above it. A draw
// that lands exactly on the threshold (probability zero under continuous
// fading) counts as neither. Comparisons run in the gain domain, which is
// algebraically identical to comparing capacities.
struct DtEvents {
  bool outage;
  bool intercept;
};

inline DtEvents classify_dt(const ChannelDraw& d, double alpha) {
  return DtEvents{d.g_sd < alpha, d.g_se > alpha};
}

struct OrsEvents {
  bool outage;
  bool intercept;
  int best;  // selected relay, -1 when the decoding set is empty
};

inline OrsEvents classify_ors(const ChannelDraw& d, double delta) {
  int best = -1;
  double best_gain = -1.0;
  for (std::size_t i = 0; i < d.g_si.size(); ++i) {
    if (d.g_si[i] > delta && d.g_id[i] > best_gain) {  // ties keep the lowest index
      best = static_cast<int>(i);
      best_gain = d.g_id[i];
    }
  }
  if (best < 0) {
    return OrsEvents{true, d.g_se > delta, -1};
  }
  const bool outage = d.g_id[static_cast<std::size_t>(best)] < delta;
  const bool intercept = d.g_se > delta || d.g_ie[static_cast<std::size_t>(best)] > delta;
  return OrsEvents{outage, intercept, best};
}

namespace detail {

template <class Classify>
inline McPair run_trials(const ChannelProfile& profile, std::uint64_t trials, std::uint64_t seed,
                         int workers, double confidence, Classify classify) {
  if (trials < 1) throw std::domain_error("trials must be >= 1");
  const int max_workers = 256;
  int w = std::clamp(workers, 1, max_workers);
  if (static_cast<std::uint64_t>(w) > trials) w = static_cast<int>(trials);

  std::vector<std::uint64_t> outages(static_cast<std::size_t>(w), 0);
  std::vector<std::uint64_t> intercepts(static_cast<std::size_t>(w), 0);

  auto run_range = [&](int worker, std::uint64_t lo, std::uint64_t hi) {
    ChannelDraw draw;
    std::uint64_t n_out = 0;
    std::uint64_t n_int = 0;
    for (std::uint64_t t = lo; t < hi; ++t) {
      CounterRng rng(seed, t);  // one substream per trial
      draw_channel(profile, rng, draw);
      const auto ev = classify(draw);
      n_out += ev.outage ? 1 : 0;
      n_int += ev.intercept ? 1 : 0;
    }
    outages[static_cast<std::size_t>(worker)] = n_out;
    intercepts[static_cast<std::size_t>(worker)] = n_int;
  };

  if (w == 1) {
    run_range(0, 0, trials);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(w));
    const std::uint64_t chunk = trials / static_cast<std::uint64_t>(w);
    const std::uint64_t rem = trials % static_cast<std::uint64_t>(w);
    std::uint64_t lo = 0;
    for (int k = 0; k < w; ++k) {
      const std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(k) < rem ? 1 : 0);
      pool.emplace_back(run_range, k, lo, hi);
      lo = hi;
    }
    for (auto& th : pool) th.join();
  }

  std::uint64_t events_out = 0;
  std::uint64_t events_int = 0;
  for (int k = 0; k < w; ++k) {
    events_out += outages[static_cast<std::size_t>(k)];
    events_int += intercepts[static_cast<std::size_t>(k)];
  }

  auto make = [&](std::uint64_t events) {
    McEstimate e;
    e.events = events;
    e.trials = trials;
    e.p_hat = static_cast<double>(events) / static_cast<double>(trials);
    e.ci_half_width = confidence_interval(events, trials, confidence);
    e.seed = seed;
    return e;
  };
  return McPair{make(events_out), make(events_int)};
}

}  // namespace detail

/// Event-level estimate of the direct-transmission outage and intercept
/// probabilities, both counted on the same draws.
inline McPair simulate_dt(const SystemConfig& config, const ChannelProfile& profile,
                          std::uint64_t trials, std::uint64_t seed, int workers = 1,
                          double confidence = kDefaultConfidence) {
  const double alpha = alpha_threshold(config.rate, config.snr);
  return detail::run_trials(profile, trials, seed, workers, confidence,
                            [alpha](const ChannelDraw& d) { return classify_dt(d, alpha); });
}

/// Event-level estimate for opportunistic relay selection: decoding-set
/// formation, best-relay choice, destination outage and eavesdropper
/// two-copy interception, per trial.
inline McPair simulate_ors(const SystemConfig& config, const ChannelProfile& profile,
                           std::uint64_t trials, std::uint64_t seed, int workers = 1,
                           double confidence = kDefaultConfidence) {
  const double delta = delta_threshold(config.rate, config.snr);
  return detail::run_trials(profile, trials, seed, workers, confidence,
                            [delta](const ChannelDraw& d) { return classify_ors(d, delta); });
}

}  // namespace srt

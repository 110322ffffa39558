#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "srt/direct.hpp"
#include "srt/math.hpp"
#include "srt/model.hpp"
#include "srt/montecarlo.hpp"
#include "srt/ors_exact.hpp"
#include "srt/ors_iid.hpp"
#include "srt/quadrature.hpp"
#include "srt/results.hpp"
#include "srt/rng.hpp"

namespace srt {

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Deterministic per-job seed derivation, same mixing as the trial streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t ordinal) {
  return mix64(mix64(seed + kGolden) + ordinal);
}

// Independent route to the selection probability: numeric quadrature of
//   prod_{j in set \ {i}} (1 - e^(-x/sigma_j)) * (1/sigma_i) e^(-x/sigma_i)
// over [0, 40 * max sigma]; the truncated tail is below e^-40. The range is
// pre-split at geometric breakpoints anchored on the smallest gain so the
// adaptive pass cannot step over a narrow concentration of mass.
inline double quadrature_pr_best_is(DecodingSet set, int i, std::span<const double> sigma_id2,
                                    double abs_tol = 1e-10) {
  detail::check_set_bounds(set, sigma_id2.size());
  if (!set.contains(i)) {
    throw std::domain_error("quadrature_pr_best_is: relay i must belong to the set");
  }
  std::vector<double> rival_sigmas;
  double sigma_max = sigma_id2[static_cast<std::size_t>(i)];
  double sigma_min = sigma_id2[static_cast<std::size_t>(i)];
  for (std::size_t j = 0; j < sigma_id2.size(); ++j) {
    const int jj = static_cast<int>(j);
    if (jj == i || !set.contains(jj)) continue;
    rival_sigmas.push_back(sigma_id2[j]);
    sigma_max = std::max(sigma_max, sigma_id2[j]);
    sigma_min = std::min(sigma_min, sigma_id2[j]);
  }
  const double si = sigma_id2[static_cast<std::size_t>(i)];
  auto integrand = [&](double x) {
    double p = std::exp(-x / si) / si;
    for (double s : rival_sigmas) p *= one_minus_exp_neg(x / s);
    return p;
  };
  const double x_max = 40.0 * sigma_max;
  std::vector<double> breaks{0.0};
  for (double x = 0.25 * sigma_min; x < x_max; x *= 2.0) breaks.push_back(x);
  breaks.push_back(x_max);
  const double panel_tol = abs_tol / static_cast<double>(breaks.size() - 1);
  CompensatedSum total;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    total.add(integrate_adaptive(integrand, breaks[k], breaks[k + 1], panel_tol));
  }
  return total.value();
}

enum class Engine { analytic_general, analytic_iid, asymptotic, mc };

inline const char* engine_name(Engine e) {
  switch (e) {
    case Engine::analytic_general: return "analytic_general";
    case Engine::analytic_iid: return "analytic_iid";
    case Engine::asymptotic: return "asymptotic";
    case Engine::mc: return "mc";
  }
  return "?";
}

inline std::optional<Engine> engine_from_name(const std::string& s) {
  if (s == "analytic_general") return Engine::analytic_general;
  if (s == "analytic_iid") return Engine::analytic_iid;
  if (s == "asymptotic") return Engine::asymptotic;
  if (s == "mc") return Engine::mc;
  return std::nullopt;
}

enum class SweepKind { srt_curve, outage_vs_n, intercept_vs_n };

inline const char* sweep_kind_name(SweepKind k) {
  switch (k) {
    case SweepKind::srt_curve: return "srt_curve";
    case SweepKind::outage_vs_n: return "outage_vs_n";
    case SweepKind::intercept_vs_n: return "intercept_vs_n";
  }
  return "?";
}

inline std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0 && hi > lo) || points < 2) {
    throw std::domain_error("log grid needs 0 < lo < hi and at least 2 points");
  }
  std::vector<double> g(static_cast<std::size_t>(points));
  const double llo = std::log(lo);
  const double step = (std::log(hi) - llo) / (points - 1);
  for (int k = 0; k < points; ++k) g[static_cast<std::size_t>(k)] = std::exp(llo + k * step);
  g.back() = hi;
  return g;
}

struct SweepSpec {
  SweepKind kind = SweepKind::srt_curve;
  std::vector<double> grid;                   // srt_curve: two-slot thresholds; *_vs_n: relay counts
  double mer_db = 10.0;
  std::vector<int> relay_counts = {2, 4, 6};  // srt_curve only
  double constraint = 0.1;                    // outage_vs_n: p_int; intercept_vs_n: p_out
  std::vector<Engine> engines = {Engine::analytic_iid};
  double rate = 1.0;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  double confidence = kDefaultConfidence;
  int workers = 1;
  double solver_tol = 1e-12;
};

struct TrendCheck {
  std::string name;
  bool pass = false;
  double worst = 0.0;  // largest violation / discrepancy observed
};

struct SweepResult {
  ResultTable table;
  std::vector<TrendCheck> trend_checks;

  bool trends_ok() const {
    for (const auto& c : trend_checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

namespace detail {

inline void check_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw std::domain_error("sweep grid must be non-empty");
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (!(grid[k] > grid[k - 1])) {
      throw std::domain_error("sweep grid must be strictly increasing");
    }
  }
}

inline std::vector<Engine> canonical_engines(std::vector<Engine> engines) {
  std::sort(engines.begin(), engines.end(),
            [](Engine a, Engine b) { return static_cast<int>(a) < static_cast<int>(b); });
  engines.erase(std::unique(engines.begin(), engines.end()), engines.end());
  if (engines.empty()) throw std::domain_error("at least one engine is required");
  return engines;
}

inline void parallel_for(std::size_t jobs, int workers, const std::function<void(std::size_t)>& fn) {
  const int w = std::clamp(workers, 1, 256);
  if (w == 1 || jobs <= 1) {
    for (std::size_t j = 0; j < jobs; ++j) fn(j);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t j = next.fetch_add(1);
      if (j >= jobs) return;
      fn(j);
    }
  };
  std::vector<std::thread> pool;
  const int spawn = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(w), jobs));
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int k = 0; k < spawn; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Strictly decreasing / monotone helpers over optional series; missing points
// are skipped.
inline TrendCheck check_strictly_decreasing(const std::string& name,
                                            const std::vector<std::optional<double>>& ys) {
  TrendCheck c{name, true, 0.0};
  std::optional<double> prev;
  for (const auto& y : ys) {
    if (!y) continue;
    if (prev && !(*y < *prev)) {
      c.pass = false;
      c.worst = std::max(c.worst, *y - *prev);
    }
    prev = y;
  }
  return c;
}

inline TrendCheck check_monotone(const std::string& name,
                                 const std::vector<std::optional<double>>& ys, bool nondecreasing) {
  TrendCheck c{name, true, 0.0};
  std::optional<double> prev;
  for (const auto& y : ys) {
    if (!y) continue;
    if (prev) {
      const double viol = nondecreasing ? *prev - *y : *y - *prev;
      if (viol > 0.0) {
        c.pass = false;
        c.worst = std::max(c.worst, viol);
      }
    }
    prev = y;
  }
  return c;
}

}  // namespace detail

// Tradeoff-curve sweep over the two-slot threshold. Each grid value fixes the
// SNR through the configured rate; direct transmission is evaluated at the
// matching single-slot threshold so both schemes share (rate, snr).
inline SweepResult sweep_srt_curve(const SweepSpec& spec) {
  detail::check_grid(spec.grid);
  if (!(spec.rate > 0.0)) throw std::domain_error("srt_curve sweep requires rate > 0");
  const auto engines = detail::canonical_engines(spec.engines);
  const double mer = mer_from_db(spec.mer_db);
  const double sigma_m2 = 1.0;
  const double sigma_e2 = 1.0 / mer;
  for (int n : spec.relay_counts) {
    if (n < 1) throw std::domain_error("relay counts must be >= 1");
  }

  struct Job {
    std::size_t grid_idx;
    int n_relays;  // 0 = direct transmission
    Engine engine;
  };
  std::vector<Job> jobs;
  for (std::size_t g = 0; g < spec.grid.size(); ++g) {
    for (Engine e : engines) {
      if (e != Engine::asymptotic) jobs.push_back(Job{g, 0, e});
    }
    for (int n : spec.relay_counts) {
      for (Engine e : engines) jobs.push_back(Job{g, n, e});
    }
  }

  std::vector<ResultRow> rows(jobs.size());
  auto run_job = [&](std::size_t j) {
    const Job& job = jobs[j];
    const double delta = spec.grid[job.grid_idx];
    const double gamma = std::expm1(2.0 * spec.rate * std::numbers::ln2) / delta;
    const SystemConfig config(spec.rate, gamma);
    const Thresholds thr = thresholds_for(config);

    ResultRow r;
    r.sweep_kind = sweep_kind_name(SweepKind::srt_curve);
    r.n_relays = job.n_relays;
    r.mer_db = spec.mer_db;
    r.rate = spec.rate;
    r.snr_db = db_from_linear(gamma);
    r.delta = delta;
    r.engine = engine_name(job.engine);
    r.seed = spec.seed;
    try {
      if (job.n_relays == 0) {
        if (job.engine == Engine::mc) {
          const ChannelProfile dt_profile(sigma_m2, sigma_e2, {}, {}, {});
          const std::uint64_t s = derive_seed(spec.seed, j);
          const McPair mc = simulate_dt(config, dt_profile, spec.trials, s, 1, spec.confidence);
          r.p_out = mc.p_out.p_hat;
          r.p_int = mc.p_int.p_hat;
          r.ci_out = mc.p_out.ci_half_width;
          r.ci_int = mc.p_int.ci_half_width;
          r.trials = spec.trials;
          r.seed = s;
        } else {
          r.p_out = dt_outage(sigma_m2, thr.alpha);
          r.p_int = dt_intercept(sigma_e2, thr.alpha);
        }
      } else {
        const IidProfile iid(sigma_m2, sigma_e2, job.n_relays);
        switch (job.engine) {
          case Engine::analytic_general: {
            const ChannelProfile p = iid.expand();
            r.p_out = ors_outage(p, thr.delta);
            r.p_int = ors_intercept(p, thr.delta);
            break;
          }
          case Engine::analytic_iid:
            r.p_out = iid_outage(job.n_relays, sigma_m2, thr.delta);
            r.p_int = iid_intercept(job.n_relays, sigma_m2, sigma_e2, thr.delta);
            break;
          case Engine::asymptotic: {
            // Large-N interception limit at the same threshold.
            const double u = std::exp(-thr.delta / sigma_e2);
            r.p_out = iid_outage(job.n_relays, sigma_m2, thr.delta);
            r.p_int = 2.0 * u - u * u;
            break;
          }
          case Engine::mc: {
            const std::uint64_t s = derive_seed(spec.seed, j);
            const McPair mc =
                simulate_ors(config, iid.expand(), spec.trials, s, 1, spec.confidence);
            r.p_out = mc.p_out.p_hat;
            r.p_int = mc.p_int.p_hat;
            r.ci_out = mc.p_out.ci_half_width;
            r.ci_int = mc.p_int.ci_half_width;
            r.trials = spec.trials;
            r.seed = s;
            break;
          }
        }
      }
    } catch (const std::exception& e) {
      r.p_out.reset();
      r.p_int.reset();
      std::string msg = e.what();
      std::replace(msg.begin(), msg.end(), ',', ';');
      r.status = "error:" + msg;
    }
    rows[j] = std::move(r);
  };
  detail::parallel_for(jobs.size(), spec.workers, run_job);

  SweepResult out;
  out.table.rows = std::move(rows);

  // Machine-checked shape of every analytic curve: outage grows and intercept
  // shrinks along the threshold grid, and the direct-transmission pair matches
  // the tradeoff-relation route.
  auto series = [&](int n_relays, const char* engine, auto proj) {
    std::vector<std::optional<double>> ys;
    for (const auto& r : out.table.rows) {
      if (r.n_relays == n_relays && r.engine == engine && r.status == "ok") ys.push_back(proj(r));
    }
    return ys;
  };
  TrendCheck out_mono{"analytic_outage_nondecreasing_in_threshold", true, 0.0};
  TrendCheck int_mono{"analytic_intercept_nonincreasing_in_threshold", true, 0.0};
  std::vector<int> curve_ns = {0};
  curve_ns.insert(curve_ns.end(), spec.relay_counts.begin(), spec.relay_counts.end());
  for (Engine e : engines) {
    if (e == Engine::mc) continue;  // sampling noise is not a trend violation
    for (int n : curve_ns) {
      if (n == 0 && e == Engine::asymptotic) continue;
      auto po = series(n, engine_name(e), [](const ResultRow& r) { return r.p_out; });
      auto pi = series(n, engine_name(e), [](const ResultRow& r) { return r.p_int; });
      const auto c1 = detail::check_monotone(out_mono.name, po, true);
      const auto c2 = detail::check_monotone(int_mono.name, pi, false);
      out_mono.pass = out_mono.pass && c1.pass;
      out_mono.worst = std::max(out_mono.worst, c1.worst);
      int_mono.pass = int_mono.pass && c2.pass;
      int_mono.worst = std::max(int_mono.worst, c2.worst);
    }
  }
  out.trend_checks.push_back(out_mono);
  out.trend_checks.push_back(int_mono);

  TrendCheck dt_route{"dt_tradeoff_route_agreement", true, 0.0};
  for (const auto& r : out.table.rows) {
    if (r.n_relays != 0 || r.engine == "mc" || r.status != "ok" || !r.p_out || !r.p_int) continue;
    const double via_relation = dt_outage_from_intercept(*r.p_int, sigma_e2, sigma_m2);
    const double diff = std::abs(via_relation - *r.p_out);
    dt_route.worst = std::max(dt_route.worst, diff);
    if (diff > 1e-12) dt_route.pass = false;
  }
  out.trend_checks.push_back(dt_route);
  return out;
}

namespace detail {

inline std::vector<int> relay_grid(const std::vector<double>& grid) {
  check_grid(grid);
  std::vector<int> ns;
  ns.reserve(grid.size());
  for (double v : grid) {
    const int n = static_cast<int>(std::llround(v));
    if (n < 1 || std::abs(v - n) > 1e-9) {
      throw std::domain_error("relay-count grid must hold integers >= 1");
    }
    ns.push_back(n);
  }
  return ns;
}

}  // namespace detail

/// Outage level versus relay count under a fixed intercept constraint; rows
/// carry the finite-N inversion and the large-N closed form.
inline SweepResult sweep_outage_vs_n(const SweepSpec& spec) {
  const auto ns = detail::relay_grid(spec.grid);
  if (!(spec.constraint > 0.0 && spec.constraint < 1.0)) {
    throw std::domain_error("intercept constraint must lie in (0,1)");
  }
  const auto engines = detail::canonical_engines(spec.engines);
  const double mer = mer_from_db(spec.mer_db);

  SweepResult out;
  for (std::size_t g = 0; g < ns.size(); ++g) {
    for (Engine e : engines) {
      ResultRow r;
      r.sweep_kind = sweep_kind_name(SweepKind::outage_vs_n);
      r.n_relays = ns[g];
      r.mer_db = spec.mer_db;
      r.engine = engine_name(e);
      r.p_int = spec.constraint;
      r.seed = spec.seed;
      try {
        switch (e) {
          case Engine::analytic_iid:
            r.p_out = solve_outage_given_intercept_finite(spec.constraint, ns[g], mer,
                                                          spec.solver_tol);
            break;
          case Engine::asymptotic:
            r.p_out = outage_from_intercept_asymptotic(spec.constraint, ns[g], mer);
            break;
          default:
            r.status = "error:engine " + std::string(engine_name(e)) +
                       " is not defined for this sweep";
        }
      } catch (const infeasible_error&) {
        r.status = "infeasible";
      } catch (const std::exception& ex) {
        std::string msg = ex.what();
        std::replace(msg.begin(), msg.end(), ',', ';');
        r.status = "error:" + msg;
      }
      out.table.rows.push_back(std::move(r));
    }
  }

  for (Engine e : engines) {
    if (e != Engine::analytic_iid && e != Engine::asymptotic) continue;
    std::vector<std::optional<double>> ys;
    for (const auto& r : out.table.rows) {
      if (r.engine == engine_name(e) && r.status == "ok") ys.push_back(r.p_out);
    }
    out.trend_checks.push_back(detail::check_strictly_decreasing(
        std::string("outage_strictly_decreasing_") + engine_name(e), ys));
  }
  return out;
}

/// Intercept level versus relay count under a fixed outage constraint.
inline SweepResult sweep_intercept_vs_n(const SweepSpec& spec) {
  const auto ns = detail::relay_grid(spec.grid);
  if (!(spec.constraint > 0.0 && spec.constraint < 1.0)) {
    throw std::domain_error("outage constraint must lie in (0,1)");
  }
  const auto engines = detail::canonical_engines(spec.engines);
  const double mer = mer_from_db(spec.mer_db);

  SweepResult out;
  for (std::size_t g = 0; g < ns.size(); ++g) {
    for (Engine e : engines) {
      ResultRow r;
      r.sweep_kind = sweep_kind_name(SweepKind::intercept_vs_n);
      r.n_relays = ns[g];
      r.mer_db = spec.mer_db;
      r.engine = engine_name(e);
      r.p_out = spec.constraint;
      r.seed = spec.seed;
      try {
        switch (e) {
          case Engine::analytic_iid:
            r.p_int = intercept_from_outage_finite(spec.constraint, ns[g], mer);
            break;
          case Engine::asymptotic:
            r.p_int = intercept_asymptotic(spec.constraint, ns[g], mer);
            break;
          default:
            r.status = "error:engine " + std::string(engine_name(e)) +
                       " is not defined for this sweep";
        }
      } catch (const std::exception& ex) {
        std::string msg = ex.what();
        std::replace(msg.begin(), msg.end(), ',', ';');
        r.status = "error:" + msg;
      }
      out.table.rows.push_back(std::move(r));
    }
  }

  for (Engine e : engines) {
    if (e != Engine::analytic_iid && e != Engine::asymptotic) continue;
    std::vector<std::optional<double>> ys;
    for (const auto& r : out.table.rows) {
      if (r.engine == engine_name(e) && r.status == "ok") ys.push_back(r.p_int);
    }
    out.trend_checks.push_back(detail::check_strictly_decreasing(
        std::string("intercept_strictly_decreasing_") + engine_name(e), ys));
  }
  return out;
}

inline SweepResult run_sweep(const SweepSpec& spec) {
  switch (spec.kind) {
    case SweepKind::srt_curve: return sweep_srt_curve(spec);
    case SweepKind::outage_vs_n: return sweep_outage_vs_n(spec);
    case SweepKind::intercept_vs_n: return sweep_intercept_vs_n(spec);
  }
  throw std::logic_error("unknown sweep kind");
}

namespace detail {

// Deterministic parameter source for the verification suite.
class ParamRng {
 public:
  explicit ParamRng(std::uint64_t seed, std::uint64_t stream) : rng_(seed, stream) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * rng_.next_unit(); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(rng_.next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  CounterRng rng_;
};

inline ChannelProfile random_profile(ParamRng& rng, int n) {
  auto vec = [&] {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = rng.log_uniform(0.2, 5.0);
    return v;
  };
  return ChannelProfile(rng.log_uniform(0.2, 5.0), rng.log_uniform(0.2, 5.0), vec(), vec(), vec());
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace detail

// Cross-verification suite: each check pits two independent routes to the
// same probability against each other (or an estimate against its confidence
// band). `fault` perturbs one input of the second route by the given relative
// amount — useful for confirming the checks actually bite.
inline VerifyReport verify_suite(std::uint64_t seed, std::uint64_t trials, int workers = 1,
                                 double fault = 0.0) {
  if (trials < 100000) throw std::domain_error("verify suite requires trials >= 100000");
  VerifyReport report;
  report.seed = seed;
  report.trials = trials;
  const double bump = 1.0 + fault;

  {  // identical-gain fast path vs exact enumeration
    detail::ParamRng rng(seed, 1);
    VerifyCheck c{"iid_vs_general", 0, 0.0, 1e-10, false};
    for (int n = 1; n <= 4; ++n) {
      for (int rep = 0; rep < 25; ++rep) {
        const double sigma_m2 = rng.log_uniform(0.1, 10.0);
        const double mer = rng.log_uniform(0.1, 30.0);
        const double delta = sigma_m2 * rng.log_uniform(0.01, 3.0);
        const IidProfile iid(sigma_m2 * bump, sigma_m2 / mer, n);
        const ChannelProfile general(sigma_m2, sigma_m2 / mer,
                                     std::vector<double>(static_cast<std::size_t>(n), sigma_m2),
                                     std::vector<double>(static_cast<std::size_t>(n), sigma_m2),
                                     std::vector<double>(static_cast<std::size_t>(n),
                                                         sigma_m2 / mer));
        c.max_delta = std::max(
            c.max_delta, detail::rel_diff(iid_outage(n, iid.sigma_m2, delta),
                                          ors_outage(general, delta)));
        c.max_delta = std::max(
            c.max_delta, detail::rel_diff(iid_intercept(n, iid.sigma_m2, iid.sigma_e2, delta),
                                          ors_intercept(general, delta)));
        c.cases += 2;
      }
    }
    c.pass = c.max_delta <= c.tolerance;
    report.checks.push_back(c);
  }

  {  // outage->intercept relation vs direct intercept evaluation
    detail::ParamRng rng(seed, 2);
    VerifyCheck c{"finite_tradeoff_consistency", 0, 0.0, 1e-10, false};
    for (int rep = 0; rep < 100; ++rep) {
      const int n = rng.uniform_int(1, 8);
      const double sigma_m2 = rng.log_uniform(0.1, 10.0);
      const double mer = rng.log_uniform(0.1, 30.0);
      const double sigma_e2 = sigma_m2 / mer;
      const double delta = sigma_m2 * rng.log_uniform(0.01, 3.0);
      const double p_out = iid_outage(n, sigma_m2, delta);
      const double via_relation = intercept_from_outage_finite(p_out, n, mer * bump);
      const double direct = iid_intercept(n, sigma_m2, sigma_e2, delta);
      c.max_delta = std::max(c.max_delta, detail::rel_diff(via_relation, direct));
      ++c.cases;
    }
    c.pass = c.max_delta <= c.tolerance;
    report.checks.push_back(c);
  }

  {  // inclusion-exclusion selection probability vs quadrature
    detail::ParamRng rng(seed, 3);
    VerifyCheck c{"selection_quadrature", 0, 0.0, 1e-8, false};
    for (int rep = 0; rep < 25; ++rep) {
      const int n = rng.uniform_int(1, 4);
      std::vector<double> sigma_id2(static_cast<std::size_t>(n));
      for (auto& s : sigma_id2) s = rng.log_uniform(0.2, 5.0);
      auto perturbed = sigma_id2;
      perturbed[0] *= bump;
      const DecodingSet set = DecodingSet::full(n);
      for (int i = 0; i < n; ++i) {
        const double exact = pr_best_is(set, i, sigma_id2);
        const double quad = quadrature_pr_best_is(set, i, perturbed, 1e-10);
        c.max_delta = std::max(c.max_delta, std::abs(exact - quad));
        ++c.cases;
      }
    }
    c.pass = c.max_delta <= c.tolerance;
    report.checks.push_back(c);
  }

  {  // Monte Carlo containment against the closed forms
    detail::ParamRng rng(seed, 4);
    VerifyCheck c{"mc_containment", 0, 0.0, 1.0, false};  // |p_hat - p| / ci
    auto ratio = [](double p_hat, double p, double ci) {
      const double diff = std::abs(p_hat - p);
      if (diff == 0.0) return 0.0;
      return ci > 0.0 ? diff / ci : std::numeric_limits<double>::infinity();
    };
    {
      const double sigma_sd2 = rng.log_uniform(0.3, 3.0);
      const double sigma_se2 = rng.log_uniform(0.3, 3.0);
      const double alpha = sigma_sd2 * rng.log_uniform(0.05, 1.0);
      const SystemConfig config(1.0, std::expm1(std::numbers::ln2) / alpha);
      const ChannelProfile profile(sigma_sd2 * bump, sigma_se2, {}, {}, {});
      const Thresholds thr = thresholds_for(config);
      const McPair mc = simulate_dt(config, profile, trials, derive_seed(seed, 100), workers);
      c.max_delta = std::max(c.max_delta, ratio(mc.p_out.p_hat, dt_outage(sigma_sd2, thr.alpha),
                                                mc.p_out.ci_half_width));
      c.max_delta = std::max(c.max_delta, ratio(mc.p_int.p_hat, dt_intercept(sigma_se2, thr.alpha),
                                                mc.p_int.ci_half_width));
      c.cases += 2;
    }
    int ordinal = 101;
    for (int n : {1, 2, 4}) {
      ChannelProfile profile = detail::random_profile(rng, n);
      const double delta = rng.log_uniform(0.05, 1.0);
      const SystemConfig config(1.0, std::expm1(2.0 * std::numbers::ln2) / delta);
      const Thresholds thr = thresholds_for(config);
      ChannelProfile analytic_profile = profile;
      analytic_profile.sigma_sd2 *= bump;  // no-op for the relayed path
      analytic_profile.sigma_si2[0] *= bump;
      const McPair mc =
          simulate_ors(config, profile, trials, derive_seed(seed, static_cast<std::uint64_t>(ordinal++)),
                       workers);
      c.max_delta = std::max(c.max_delta, ratio(mc.p_out.p_hat,
                                                ors_outage(analytic_profile, thr.delta),
                                                mc.p_out.ci_half_width));
      c.max_delta = std::max(c.max_delta, ratio(mc.p_int.p_hat,
                                                ors_intercept(analytic_profile, thr.delta),
                                                mc.p_int.ci_half_width));
      c.cases += 2;
    }
    c.pass = c.max_delta <= c.tolerance;
    report.checks.push_back(c);
  }

  {  // expanded per-member interception form vs complement form
    detail::ParamRng rng(seed, 5);
    VerifyCheck c{"intercept_expansion", 0, 0.0, 1e-12, false};
    for (int rep = 0; rep < 50; ++rep) {
      const int n = rng.uniform_int(1, 4);
      const ChannelProfile profile = detail::random_profile(rng, n);
      const double delta = rng.log_uniform(0.01, 3.0);
      const std::uint32_t sets = std::uint32_t{1} << n;
      for (std::uint32_t m = 1; m < sets; ++m) {
        const DecodingSet d{m};
        const double complement = pr_eav_intercept_given_set(
            d, profile.sigma_se2, profile.sigma_id2, profile.sigma_ie2, delta);
        const double expanded = pr_eav_intercept_given_set_expanded(
            d, profile.sigma_se2 * bump, profile.sigma_id2, profile.sigma_ie2, delta);
        c.max_delta = std::max(c.max_delta, std::abs(complement - expanded));
        ++c.cases;
      }
    }
    c.pass = c.max_delta <= c.tolerance;
    report.checks.push_back(c);
  }

  return report;
}

}  // namespace srt

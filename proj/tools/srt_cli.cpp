// Command-line surface for the security-reliability tradeoff toolkit: closed
// forms for direct transmission and opportunistic relay selection, the Monte
// Carlo estimator, threshold sweeps and the cross-verification suite.
//
// Every number shown on screen is part of the machine-readable artifact; with
// --out the same bytes are also written to disk.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "srt/config.hpp"
#include "srt/direct.hpp"
#include "srt/experiments.hpp"
#include "srt/montecarlo.hpp"
#include "srt/ors_exact.hpp"
#include "srt/ors_iid.hpp"
#include "srt/results.hpp"

namespace {

using namespace srt;

int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Minimal ordered JSON object builder; doubles use shortest round-trip form.
class JsonObject {
 public:
  JsonObject& field(const std::string& name, double v) { return raw(name, fmt_double(v)); }
  JsonObject& field(const std::string& name, std::uint64_t v) {
    return raw(name, std::to_string(v));
  }
  JsonObject& field(const std::string& name, int v) { return raw(name, std::to_string(v)); }
  JsonObject& field(const std::string& name, const std::string& v) {
    std::ostringstream esc;
    json_escape_to(esc, v);
    return raw(name, "\"" + esc.str() + "\"");
  }
  JsonObject& raw(const std::string& name, const std::string& v) {
    if (!first_) os_ << ",";
    first_ = false;
    os_ << "\"" << name << "\":" << v;
    return *this;
  }
  std::string str() const { return "{" + os_.str() + "}\n"; }

 private:
  std::ostringstream os_;
  bool first_ = true;
};

// Optional SRT_OUT_DIR prefixes relative --out paths.
std::string out_path_for(const std::string& path) {
  const char* dir = std::getenv("SRT_OUT_DIR");
  if (dir == nullptr || path.empty() || path.front() == '/') return path;
  std::string base(dir);
  if (!base.empty() && base.back() != '/') base += '/';
  return base + path;
}

void emit(const std::string& text, const std::optional<std::string>& out_path) {
  std::cout << text;
  if (out_path) {
    const std::string path = out_path_for(*out_path);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw config_error("cannot write output file: " + path);
    f << text;
  }
}

struct TableArtifact {
  std::string csv;
  std::string json;
};

void emit_table(const TableArtifact& art, const std::string& format,
                const std::optional<std::string>& out_base) {
  std::cout << (format == "json" ? art.json : art.csv);
  if (out_base) {
    const std::string base = out_path_for(*out_base);
    std::ofstream fc(base + ".csv", std::ios::binary);
    std::ofstream fj(base + ".json", std::ios::binary);
    if (!fc || !fj) throw config_error("cannot write output files at base: " + base);
    fc << art.csv;
    fj << art.json;
  }
}

// Shared scenario flags; merged over an optional config file, flags winning.
struct ScenarioFlags {
  std::optional<std::string> config_path;
  std::optional<std::string> gains_path;
  std::optional<double> rate, snr, snr_db, mer, mer_db, delta;
  std::optional<int> n_relays;

  void attach(CLI::App* cmd, bool with_relays = true) {
    cmd->add_option("--config", config_path, "JSON config file (flags override it)");
    cmd->add_option("--gains-file", gains_path, "JSON file with explicit per-link gain arrays");
    cmd->add_option("--rate", rate, "data rate in bits/s/Hz (default 1)");
    cmd->add_option("--snr", snr, "SNR, linear");
    cmd->add_option("--snr-db", snr_db, "SNR in dB");
    cmd->add_option("--mer", mer, "main-to-eavesdropper ratio, linear");
    cmd->add_option("--mer-db", mer_db, "main-to-eavesdropper ratio in dB");
    cmd->add_option("--delta", delta, "two-slot decoding threshold (sets SNR through the rate)");
    if (with_relays) cmd->add_option("--n-relays", n_relays, "number of relays");
  }

  ScenarioInputs resolve() const {
    ScenarioInputs merged;
    if (config_path) merged = ScenarioInputs::from_file(FileConfig::load(*config_path));
    if (gains_path) {
      ScenarioInputs g = ScenarioInputs::from_file(FileConfig::load(*gains_path));
      merged.overlay(g);
    }
    ScenarioInputs flags;
    flags.rate = rate;
    flags.snr = snr;
    flags.snr_db = snr_db;
    flags.mer = mer;
    flags.mer_db = mer_db;
    flags.delta = delta;
    flags.n_relays = n_relays;
    merged.overlay(flags);
    return merged;
  }
};

std::vector<Engine> parse_engines(const std::vector<std::string>& names) {
  std::vector<Engine> engines;
  for (const auto& n : names) {
    const auto e = engine_from_name(n);
    if (!e) {
      throw config_error("unknown engine '" + n +
                         "' (expected analytic_general, analytic_iid, asymptotic or mc)");
    }
    engines.push_back(*e);
  }
  return engines;
}

std::vector<double> integer_log_grid(double lo, double hi, int points) {
  std::vector<double> grid;
  for (double v : log_grid(lo, hi, points)) {
    const double n = static_cast<double>(std::llround(v));
    if (grid.empty() || n > grid.back()) grid.push_back(n);
  }
  return grid;
}

int run_app(int argc, char** argv) {
  CLI::App app{"Security-reliability tradeoff analysis of direct transmission and "
               "opportunistic decode-and-forward relay selection under eavesdropping"};
  app.require_subcommand(1);

  // dt-srt -------------------------------------------------------------
  auto* dt = app.add_subcommand("dt-srt", "direct-transmission tradeoff pair");
  ScenarioFlags dt_flags;
  dt_flags.attach(dt, false);
  std::optional<double> dt_p_int, dt_p_out;
  std::optional<std::string> dt_out;
  dt->add_option("--p-int", dt_p_int, "intercept probability to invert");
  dt->add_option("--p-out", dt_p_out, "outage probability to invert");
  dt->add_option("--out", dt_out, "also write the JSON result to this file");

  // ors-exact ----------------------------------------------------------
  auto* oe = app.add_subcommand("ors-exact", "exact relay-selection probabilities, any gains");
  ScenarioFlags oe_flags;
  oe_flags.attach(oe);
  std::optional<std::string> oe_out;
  oe->add_option("--out", oe_out, "also write the JSON result to this file");

  // ors-iid ------------------------------------------------------------
  auto* oi = app.add_subcommand("ors-iid", "identical-gain fast path");
  ScenarioFlags oi_flags;
  oi_flags.attach(oi);
  std::optional<std::string> oi_out;
  oi->add_option("--out", oi_out, "also write the JSON result to this file");

  // solve ----------------------------------------------------------------
  auto* so = app.add_subcommand("solve", "invert the finite-N tradeoff relation");
  ScenarioFlags so_flags;
  so_flags.attach(so);
  std::optional<double> so_p_int, so_p_out;
  double so_tol = 1e-12;
  std::optional<std::string> so_out;
  so->add_option("--p-int", so_p_int, "intercept constraint; solves for the outage level");
  so->add_option("--p-out", so_p_out, "outage constraint; evaluates the intercept level");
  so->add_option("--tol", so_tol, "solver tolerance on the intercept residual");
  so->add_option("--out", so_out, "also write the JSON result to this file");

  // mc ---------------------------------------------------------------------
  auto* mc = app.add_subcommand("mc", "Monte Carlo event simulation");
  ScenarioFlags mc_flags;
  mc_flags.attach(mc);
  std::uint64_t mc_trials = 1'000'000;
  std::uint64_t mc_seed = kDefaultSeed;
  int mc_workers = default_workers();
  std::string mc_scheme = "both";
  std::optional<std::string> mc_out;
  mc->add_option("--trials", mc_trials, "number of trials");
  mc->add_option("--seed", mc_seed, "RNG seed");
  mc->add_option("--workers", mc_workers, "worker threads (result is worker-independent)");
  mc->add_option("--scheme", mc_scheme, "dt, ors or both")
      ->check(CLI::IsMember({"dt", "ors", "both"}));
  mc->add_option("--out", mc_out, "also write the JSON result to this file");

  // sweep --------------------------------------------------------------
  auto* sw = app.add_subcommand("sweep", "regenerate curve datasets");
  std::string sw_kind;
  sw->add_option("--kind", sw_kind, "srt-curve, outage-vs-n or intercept-vs-n")
      ->required()
      ->check(CLI::IsMember({"srt-curve", "outage-vs-n", "intercept-vs-n"}));
  std::optional<double> sw_grid_min, sw_grid_max;
  std::optional<int> sw_grid_points;
  sw->add_option("--grid-min", sw_grid_min, "sweep grid lower bound");
  sw->add_option("--grid-max", sw_grid_max, "sweep grid upper bound");
  sw->add_option("--grid-points", sw_grid_points, "sweep grid size");
  std::optional<double> sw_mer, sw_mer_db;
  sw->add_option("--mer", sw_mer, "MER, linear");
  sw->add_option("--mer-db", sw_mer_db, "MER in dB");
  std::vector<int> sw_relays = {2, 4, 6};
  sw->add_option("--n-relays", sw_relays, "relay counts for tradeoff curves")->delimiter(',');
  std::vector<std::string> sw_engines = {"analytic_iid"};
  sw->add_option("--engines", sw_engines, "engines to run")->delimiter(',');
  std::optional<double> sw_p_int, sw_p_out;
  sw->add_option("--p-int", sw_p_int, "intercept constraint (outage-vs-n)");
  sw->add_option("--p-out", sw_p_out, "outage constraint (intercept-vs-n)");
  double sw_rate = 1.0;
  sw->add_option("--rate", sw_rate, "data rate in bits/s/Hz");
  std::uint64_t sw_trials = 1'000'000;
  std::uint64_t sw_seed = kDefaultSeed;
  int sw_workers = default_workers();
  sw->add_option("--trials", sw_trials, "trials per Monte Carlo row");
  sw->add_option("--seed", sw_seed, "base seed; per-row seeds derive from it");
  sw->add_option("--workers", sw_workers, "worker threads");
  std::optional<std::string> sw_out;
  std::string sw_format = "csv";
  sw->add_option("--out", sw_out, "output base path; writes <base>.csv and <base>.json");
  sw->add_option("--format", sw_format, "stdout format")->check(CLI::IsMember({"csv", "json"}));

  // verify -------------------------------------------------------------
  auto* ve = app.add_subcommand("verify", "run the cross-verification suite");
  std::uint64_t ve_trials = 1'000'000;
  std::uint64_t ve_seed = kDefaultSeed;
  int ve_workers = default_workers();
  std::optional<std::string> ve_out;
  std::string ve_format = "csv";
  ve->add_option("--trials", ve_trials, "Monte Carlo trials per containment case");
  ve->add_option("--seed", ve_seed, "RNG seed");
  ve->add_option("--workers", ve_workers, "worker threads (result is worker-independent)");
  ve->add_option("--out", ve_out, "output base path; writes <base>.csv and <base>.json");
  ve->add_option("--format", ve_format, "stdout format")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    throw config_error(e.what());
  }

  if (dt->parsed()) {
    const ScenarioInputs in = dt_flags.resolve();
    const ResolvedGains gains = resolve_dt_gains(in);
    JsonObject j;
    j.field("subcommand", std::string("dt-srt"));
    if (gains.mer_db) j.field("mer_db", *gains.mer_db);
    j.field("sigma_sd2", gains.sigma_main);
    j.field("sigma_se2", gains.sigma_eaves);
    const int given = (dt_p_int ? 1 : 0) + (dt_p_out ? 1 : 0) +
                      ((in.snr || in.snr_db || in.delta) ? 1 : 0);
    if (given != 1) {
      throw config_error("specify exactly one of --p-int, --p-out, or an SNR/threshold");
    }
    if (dt_p_int) {
      j.field("p_int", *dt_p_int);
      j.field("p_out", dt_outage_from_intercept(*dt_p_int, gains.sigma_eaves, gains.sigma_main));
    } else if (dt_p_out) {
      j.field("p_out", *dt_p_out);
      j.field("p_int", dt_intercept_from_outage(*dt_p_out, gains.sigma_eaves, gains.sigma_main));
    } else {
      const ResolvedThresholds rt = resolve_thresholds(in);
      j.field("rate", rt.rate);
      j.field("snr_db", db_from_linear(rt.snr));
      j.field("alpha", rt.thr.alpha);
      j.field("p_out", dt_outage(gains.sigma_main, rt.thr.alpha));
      j.field("p_int", dt_intercept(gains.sigma_eaves, rt.thr.alpha));
    }
    emit(j.str(), dt_out);
    return 0;
  }

  if (oe->parsed()) {
    const ScenarioInputs in = oe_flags.resolve();
    const ResolvedProfile rp = resolve_profile(in);
    const ResolvedThresholds rt = resolve_thresholds(in);
    JsonObject j;
    j.field("subcommand", std::string("ors-exact"));
    j.field("n_relays", rp.profile.relay_count());
    if (rp.mer_db) j.field("mer_db", *rp.mer_db);
    j.field("rate", rt.rate);
    j.field("snr_db", db_from_linear(rt.snr));
    j.field("delta", rt.thr.delta);
    j.field("p_out", ors_outage(rp.profile, rt.thr.delta));
    j.field("p_int", ors_intercept(rp.profile, rt.thr.delta));
    emit(j.str(), oe_out);
    return 0;
  }

  if (oi->parsed()) {
    const ScenarioInputs in = oi_flags.resolve();
    if (in.sigma_si2 || in.sigma_id2 || in.sigma_ie2) {
      throw config_error("ors-iid takes a MER and relay count; use ors-exact for explicit gains");
    }
    const auto mer = detail::resolve_linear_or_db(in.mer, in.mer_db, "mer", "mer_db");
    if (!mer || !in.n_relays) {
      std::string msg = "missing required parameters:";
      if (!mer) msg += " mer or mer_db";
      if (!in.n_relays) msg += " n_relays";
      throw config_error(msg);
    }
    const ResolvedThresholds rt = resolve_thresholds(in);
    JsonObject j;
    j.field("subcommand", std::string("ors-iid"));
    j.field("n_relays", *in.n_relays);
    j.field("mer_db", db_from_linear(*mer));
    j.field("rate", rt.rate);
    j.field("snr_db", db_from_linear(rt.snr));
    j.field("delta", rt.thr.delta);
    j.field("p_out", iid_outage(*in.n_relays, 1.0, rt.thr.delta));
    j.field("p_int", iid_intercept(*in.n_relays, 1.0, 1.0 / *mer, rt.thr.delta));
    emit(j.str(), oi_out);
    return 0;
  }

  if (so->parsed()) {
    const ScenarioInputs in = so_flags.resolve();
    const auto mer = detail::resolve_linear_or_db(in.mer, in.mer_db, "mer", "mer_db");
    if (!mer || !in.n_relays) {
      std::string msg = "missing required parameters:";
      if (!mer) msg += " mer or mer_db";
      if (!in.n_relays) msg += " n_relays";
      throw config_error(msg);
    }
    if ((so_p_int ? 1 : 0) + (so_p_out ? 1 : 0) != 1) {
      throw config_error("specify exactly one of --p-int or --p-out");
    }
    JsonObject j;
    j.field("subcommand", std::string("solve"));
    j.field("n_relays", *in.n_relays);
    j.field("mer_db", db_from_linear(*mer));
    j.field("tol", so_tol);
    if (so_p_int) {
      j.field("p_int", *so_p_int);
      j.field("p_out_finite",
              solve_outage_given_intercept_finite(*so_p_int, *in.n_relays, *mer, so_tol));
      j.field("p_out_asymptotic",
              outage_from_intercept_asymptotic(*so_p_int, *in.n_relays, *mer));
    } else {
      j.field("p_out", *so_p_out);
      j.field("p_int_finite", intercept_from_outage_finite(*so_p_out, *in.n_relays, *mer));
      j.field("p_int_asymptotic", intercept_asymptotic(*so_p_out, *in.n_relays, *mer));
    }
    emit(j.str(), so_out);
    return 0;
  }

  if (mc->parsed()) {
    const ScenarioInputs in = mc_flags.resolve();
    const ResolvedProfile rp = resolve_profile(in);
    const ResolvedThresholds rt = resolve_thresholds(in);
    const SystemConfig config(rt.rate, rt.snr);
    JsonObject j;
    j.field("subcommand", std::string("mc"));
    j.field("n_relays", rp.profile.relay_count());
    if (rp.mer_db) j.field("mer_db", *rp.mer_db);
    j.field("rate", rt.rate);
    j.field("snr_db", db_from_linear(rt.snr));
    j.field("alpha", rt.thr.alpha);
    j.field("delta", rt.thr.delta);
    j.field("trials", mc_trials);
    j.field("seed", mc_seed);
    auto estimate_json = [](const McEstimate& e) {
      JsonObject o;
      o.field("events", e.events);
      o.field("p_hat", e.p_hat);
      o.field("ci_half_width", e.ci_half_width);
      o.field("degenerate", std::string(e.degenerate() ? "true" : "false"));
      std::string s = o.str();
      s.pop_back();  // strip newline
      return s;
    };
    if (mc_scheme == "dt" || mc_scheme == "both") {
      const McPair r = simulate_dt(config, rp.profile, mc_trials, mc_seed, mc_workers);
      JsonObject o;
      o.raw("p_out", estimate_json(r.p_out));
      o.raw("p_int", estimate_json(r.p_int));
      std::string s = o.str();
      s.pop_back();
      j.raw("dt", s);
    }
    if (mc_scheme == "ors" || mc_scheme == "both") {
      const McPair r = simulate_ors(config, rp.profile, mc_trials, mc_seed, mc_workers);
      JsonObject o;
      o.raw("p_out", estimate_json(r.p_out));
      o.raw("p_int", estimate_json(r.p_int));
      std::string s = o.str();
      s.pop_back();
      j.raw("ors", s);
    }
    emit(j.str(), mc_out);
    return 0;
  }

  if (sw->parsed()) {
    SweepSpec spec;
    spec.engines = parse_engines(sw_engines);
    if (sw_mer && sw_mer_db) throw config_error("specify either --mer or --mer-db, not both");
    spec.mer_db = sw_mer_db ? *sw_mer_db : (sw_mer ? db_from_linear(*sw_mer) : 10.0);
    spec.rate = sw_rate;
    spec.trials = sw_trials;
    spec.seed = sw_seed;
    spec.workers = sw_workers;
    spec.relay_counts = sw_relays;
    if (sw_kind == "srt-curve") {
      spec.kind = SweepKind::srt_curve;
      spec.grid = log_grid(sw_grid_min.value_or(1e-4), sw_grid_max.value_or(10.0),
                           sw_grid_points.value_or(40));
    } else if (sw_kind == "outage-vs-n") {
      spec.kind = SweepKind::outage_vs_n;
      if (!sw_p_int) throw config_error("missing required parameters: p_int");
      spec.constraint = *sw_p_int;
      spec.grid = integer_log_grid(sw_grid_min.value_or(1.0), sw_grid_max.value_or(1024.0),
                                   sw_grid_points.value_or(11));
      spec.engines = sw->count("--engines") ? parse_engines(sw_engines)
                                            : std::vector<Engine>{Engine::analytic_iid,
                                                                  Engine::asymptotic};
    } else {
      spec.kind = SweepKind::intercept_vs_n;
      if (!sw_p_out) throw config_error("missing required parameters: p_out");
      spec.constraint = *sw_p_out;
      spec.grid = integer_log_grid(sw_grid_min.value_or(1.0), sw_grid_max.value_or(10000.0),
                                   sw_grid_points.value_or(14));
      spec.engines = sw->count("--engines") ? parse_engines(sw_engines)
                                            : std::vector<Engine>{Engine::analytic_iid,
                                                                  Engine::asymptotic};
    }
    const SweepResult result = run_sweep(spec);
    emit_table(TableArtifact{result.table.to_csv(), result.table.to_json()}, sw_format, sw_out);
    for (const auto& t : result.trend_checks) {
      if (!t.pass) {
        std::cerr << "{\"error\":\"trend check failed: " << t.name << "\"}\n";
        return 2;
      }
    }
    return 0;
  }

  if (ve->parsed()) {
    const VerifyReport report = verify_suite(ve_seed, ve_trials, ve_workers);
    emit_table(TableArtifact{report.to_csv(), report.to_json()}, ve_format, ve_out);
    return report.all_pass() ? 0 : 2;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::ostringstream os;
    srt::json_escape_to(os, msg);
    std::cerr << "{\"error\":\"" << os.str() << "\"}\n";
    return 1;
  }
}

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "srt/model.hpp"

namespace srt {

class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat key-value configuration file. Recognized keys: rate, snr, snr_db, mer,
// mer_db, n_relays, sigma_sd2, sigma_se2, sigma_si2, sigma_id2, sigma_ie2.
// Unknown keys are errors, not warnings.
struct FileConfig {
  std::optional<double> rate;
  std::optional<double> snr;
  std::optional<double> snr_db;
  std::optional<double> mer;
  std::optional<double> mer_db;
  std::optional<int> n_relays;
  std::optional<double> sigma_sd2;
  std::optional<double> sigma_se2;
  std::optional<std::vector<double>> sigma_si2;
  std::optional<std::vector<double>> sigma_id2;
  std::optional<std::vector<double>> sigma_ie2;

  static FileConfig parse(const std::string& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw config_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw config_error("config must be a JSON object");

    FileConfig c;
    std::vector<std::string> unknown;
    auto num = [&](const nlohmann::json& v, const std::string& key) {
      if (!v.is_number()) throw config_error("config key '" + key + "' must be a number");
      return v.get<double>();
    };
    auto arr = [&](const nlohmann::json& v, const std::string& key) {
      if (!v.is_array()) throw config_error("config key '" + key + "' must be an array");
      std::vector<double> out;
      for (const auto& x : v) out.push_back(num(x, key));
      return out;
    };
    for (const auto& [key, value] : j.items()) {
      if (key == "rate") c.rate = num(value, key);
      else if (key == "snr") c.snr = num(value, key);
      else if (key == "snr_db") c.snr_db = num(value, key);
      else if (key == "mer") c.mer = num(value, key);
      else if (key == "mer_db") c.mer_db = num(value, key);
      else if (key == "n_relays") {
        if (!value.is_number_integer()) {
          throw config_error("config key 'n_relays' must be an integer");
        }
        c.n_relays = value.get<int>();
      } else if (key == "sigma_sd2") c.sigma_sd2 = num(value, key);
      else if (key == "sigma_se2") c.sigma_se2 = num(value, key);
      else if (key == "sigma_si2") c.sigma_si2 = arr(value, key);
      else if (key == "sigma_id2") c.sigma_id2 = arr(value, key);
      else if (key == "sigma_ie2") c.sigma_ie2 = arr(value, key);
      else unknown.push_back(key);
    }
    if (!unknown.empty()) {
      std::string msg = "unknown config keys:";
      for (const auto& k : unknown) msg += " " + k;
      throw config_error(msg);
    }
    return c;
  }

  static FileConfig load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }
};

// Merged flag/file inputs; flags override file values field by field.
struct ScenarioInputs {
  std::optional<double> rate;
  std::optional<double> snr;
  std::optional<double> snr_db;
  std::optional<double> mer;
  std::optional<double> mer_db;
  std::optional<double> delta;
  std::optional<int> n_relays;
  std::optional<double> sigma_sd2;
  std::optional<double> sigma_se2;
  std::optional<std::vector<double>> sigma_si2;
  std::optional<std::vector<double>> sigma_id2;
  std::optional<std::vector<double>> sigma_ie2;

  static ScenarioInputs from_file(const FileConfig& f) {
    ScenarioInputs s;
    s.rate = f.rate;
    s.snr = f.snr;
    s.snr_db = f.snr_db;
    s.mer = f.mer;
    s.mer_db = f.mer_db;
    s.n_relays = f.n_relays;
    s.sigma_sd2 = f.sigma_sd2;
    s.sigma_se2 = f.sigma_se2;
    s.sigma_si2 = f.sigma_si2;
    s.sigma_id2 = f.sigma_id2;
    s.sigma_ie2 = f.sigma_ie2;
    return s;
  }

  void overlay(const ScenarioInputs& flags) {
    if (flags.rate) rate = flags.rate;
    if (flags.snr || flags.snr_db) {  // a flag-level SNR replaces both file forms
      snr = flags.snr;
      snr_db = flags.snr_db;
    }
    if (flags.mer || flags.mer_db) {
      mer = flags.mer;
      mer_db = flags.mer_db;
    }
    if (flags.delta) delta = flags.delta;
    if (flags.n_relays) n_relays = flags.n_relays;
    if (flags.sigma_sd2) sigma_sd2 = flags.sigma_sd2;
    if (flags.sigma_se2) sigma_se2 = flags.sigma_se2;
    if (flags.sigma_si2) sigma_si2 = flags.sigma_si2;
    if (flags.sigma_id2) sigma_id2 = flags.sigma_id2;
    if (flags.sigma_ie2) sigma_ie2 = flags.sigma_ie2;
  }
};

namespace detail {

inline std::optional<double> resolve_linear_or_db(const std::optional<double>& linear,
                                                  const std::optional<double>& db,
                                                  const char* lin_name, const char* db_name) {
  if (linear && db) {
    throw config_error(std::string("specify either ") + lin_name + " or " + db_name +
                       ", not both");
  }
  if (linear) return *linear;
  if (db) return linear_from_db(*db);
  return std::nullopt;
}

}  // namespace detail

struct ResolvedGains {
  double sigma_main;      // direct or common main-link gain
  double sigma_eaves;     // common wiretap gain
  std::optional<double> mer_db;
};

/// Gains for the direct-transmission pair: either explicit sigma_sd2/sigma_se2
/// or a MER (main gain normalized to 1).
inline ResolvedGains resolve_dt_gains(const ScenarioInputs& in) {
  const auto mer = detail::resolve_linear_or_db(in.mer, in.mer_db, "mer", "mer_db");
  if (in.sigma_sd2 || in.sigma_se2) {
    if (mer) throw config_error("gain values and a MER are mutually exclusive");
    std::vector<std::string> missing;
    if (!in.sigma_sd2) missing.push_back("sigma_sd2");
    if (!in.sigma_se2) missing.push_back("sigma_se2");
    if (!missing.empty()) {
      std::string msg = "missing required parameters:";
      for (const auto& k : missing) msg += " " + k;
      throw config_error(msg);
    }
    return ResolvedGains{*in.sigma_sd2, *in.sigma_se2,
                         db_from_linear(*in.sigma_sd2 / *in.sigma_se2)};
  }
  if (!mer) throw config_error("missing required parameters: mer or mer_db (or explicit gains)");
  return ResolvedGains{1.0, 1.0 / *mer, db_from_linear(*mer)};
}

struct ResolvedProfile {
  ChannelProfile profile;
  std::optional<double> mer_db;
};

/// Full relay profile: explicit per-link arrays, or an i.i.d. profile built
/// from a MER and relay count (main gain normalized to 1).
inline ResolvedProfile resolve_profile(const ScenarioInputs& in) {
  const auto mer = detail::resolve_linear_or_db(in.mer, in.mer_db, "mer", "mer_db");
  const bool any_array = in.sigma_si2 || in.sigma_id2 || in.sigma_ie2 || in.sigma_sd2 ||
                         in.sigma_se2;
  if (any_array) {
    if (mer) throw config_error("gain arrays and a MER are mutually exclusive");
    std::vector<std::string> missing;
    if (!in.sigma_sd2) missing.push_back("sigma_sd2");
    if (!in.sigma_se2) missing.push_back("sigma_se2");
    if (!in.sigma_si2) missing.push_back("sigma_si2");
    if (!in.sigma_id2) missing.push_back("sigma_id2");
    if (!in.sigma_ie2) missing.push_back("sigma_ie2");
    if (!missing.empty()) {
      std::string msg = "missing required parameters:";
      for (const auto& k : missing) msg += " " + k;
      throw config_error(msg);
    }
    if (in.n_relays && static_cast<std::size_t>(*in.n_relays) != in.sigma_si2->size()) {
      throw config_error("n_relays disagrees with the gain array length");
    }
    return ResolvedProfile{ChannelProfile(*in.sigma_sd2, *in.sigma_se2, *in.sigma_si2,
                                          *in.sigma_id2, *in.sigma_ie2),
                           std::nullopt};
  }
  std::vector<std::string> missing;
  if (!mer) missing.push_back("mer or mer_db (or explicit gain arrays)");
  if (!in.n_relays) missing.push_back("n_relays");
  if (!missing.empty()) {
    std::string msg = "missing required parameters:";
    for (const auto& k : missing) msg += " " + k;
    throw config_error(msg);
  }
  if (*in.n_relays == 0) {
    return ResolvedProfile{ChannelProfile(1.0, 1.0 / *mer, {}, {}, {}), db_from_linear(*mer)};
  }
  const IidProfile iid(1.0, 1.0 / *mer, *in.n_relays);
  return ResolvedProfile{iid.expand(), db_from_linear(*mer)};
}

struct ResolvedThresholds {
  double rate;
  double snr;
  Thresholds thr;
};

// Rate defaults to 1 bit/s/Hz. SNR comes from snr/snr_db, or is backed out of
// an explicit two-slot threshold.
inline ResolvedThresholds resolve_thresholds(const ScenarioInputs& in) {
  const double rate = in.rate.value_or(1.0);
  auto snr = detail::resolve_linear_or_db(in.snr, in.snr_db, "snr", "snr_db");
  if (snr && in.delta) {
    throw config_error("specify either snr/snr_db or delta, not both");
  }
  if (!snr) {
    if (!in.delta) {
      throw config_error("missing required parameters: snr or snr_db or delta");
    }
    if (!(rate > 0.0)) throw config_error("delta-based thresholds require rate > 0");
    if (!(*in.delta > 0.0)) throw config_error("delta must be > 0");
    snr = std::expm1(2.0 * rate * std::numbers::ln2) / *in.delta;
  }
  const SystemConfig config(rate, *snr);
  return ResolvedThresholds{rate, *snr, thresholds_for(config)};
}

}  // namespace srt

#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace srt {

/// Shortest decimal representation that round-trips to the same double.
inline std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string fmt_opt(const std::optional<double>& v) {
  return v ? fmt_double(*v) : std::string();
}

inline void json_escape_to(std::ostream& os, const std::string& s) {
  for (char ch : s) {
    switch (ch) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default: os << ch;
    }
  }
}

// One sweep output record. Optional fields render as empty CSV cells and JSON
// nulls; every value printed anywhere else must also appear here.
struct ResultRow {
  std::string sweep_kind;
  int n_relays = 0;  // 0 marks a direct-transmission row
  std::optional<double> mer_db;
  std::optional<double> rate;
  std::optional<double> snr_db;
  std::optional<double> delta;
  std::string engine;
  std::optional<double> p_out;
  std::optional<double> p_int;
  std::optional<double> ci_out;
  std::optional<double> ci_int;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string status = "ok";
};

inline constexpr const char* kResultHeader =
    "sweep_kind,n_relays,mer_db,rate,snr_db,delta,engine,p_out,p_int,ci_out,ci_int,trials,seed,"
    "status";

struct ResultTable {
  std::vector<ResultRow> rows;

  void write_csv(std::ostream& os) const {
    os << kResultHeader << '\n';
    for (const auto& r : rows) {
      os << r.sweep_kind << ',' << r.n_relays << ',' << fmt_opt(r.mer_db) << ','
         << fmt_opt(r.rate) << ',' << fmt_opt(r.snr_db) << ',' << fmt_opt(r.delta) << ','
         << r.engine << ',' << fmt_opt(r.p_out) << ',' << fmt_opt(r.p_int) << ','
         << fmt_opt(r.ci_out) << ',' << fmt_opt(r.ci_int) << ',' << r.trials << ',' << r.seed
         << ',' << r.status << '\n';
    }
  }

  void write_json(std::ostream& os) const {
    auto field = [&os](const char* name, const std::optional<double>& v, bool comma = true) {
      os << '"' << name << "\":" << (v ? fmt_double(*v) : "null");
      if (comma) os << ',';
    };
    os << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      os << "  {\"sweep_kind\":\"";
      json_escape_to(os, r.sweep_kind);
      os << "\",\"n_relays\":" << r.n_relays << ',';
      field("mer_db", r.mer_db);
      field("rate", r.rate);
      field("snr_db", r.snr_db);
      field("delta", r.delta);
      os << "\"engine\":\"";
      json_escape_to(os, r.engine);
      os << "\",";
      field("p_out", r.p_out);
      field("p_int", r.p_int);
      field("ci_out", r.ci_out);
      field("ci_int", r.ci_int);
      os << "\"trials\":" << r.trials << ",\"seed\":" << r.seed << ",\"status\":\"";
      json_escape_to(os, r.status);
      os << "\"}" << (i + 1 < rows.size() ? "," : "") << '\n';
    }
    os << "]\n";
  }

  std::string to_csv() const {
    std::ostringstream os;
    write_csv(os);
    return os.str();
  }

  std::string to_json() const {
    std::ostringstream os;
    write_json(os);
    return os.str();
  }
};

// Verification report: one row per cross-check, with the worst observed
// discrepancy against its tolerance.
struct VerifyCheck {
  std::string check;
  std::size_t cases = 0;
  double max_delta = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  void write_csv(std::ostream& os) const {
    os << "check,cases,max_delta,tolerance,status,seed,trials\n";
    for (const auto& c : checks) {
      os << c.check << ',' << c.cases << ',' << fmt_double(c.max_delta) << ','
         << fmt_double(c.tolerance) << ',' << (c.pass ? "pass" : "fail") << ',' << seed << ','
         << trials << '\n';
    }
  }

  void write_json(std::ostream& os) const {
    os << "[\n";
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto& c = checks[i];
      os << "  {\"check\":\"";
      json_escape_to(os, c.check);
      os << "\",\"cases\":" << c.cases << ",\"max_delta\":" << fmt_double(c.max_delta)
         << ",\"tolerance\":" << fmt_double(c.tolerance) << ",\"status\":\""
         << (c.pass ? "pass" : "fail") << "\",\"seed\":" << seed << ",\"trials\":" << trials
         << "}" << (i + 1 < checks.size() ? "," : "") << '\n';
    }
    os << "]\n";
  }

  std::string to_csv() const {
    std::ostringstream os;
    write_csv(os);
    return os.str();
  }

  std::string to_json() const {
    std::ostringstream os;
    write_json(os);
    return os.str();
  }
};

}  // namespace srt

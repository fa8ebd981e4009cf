#pragma once

// Run reports: one row per checked item, emitted as JSON, CSV, or text.
// Floats carry 12 significant digits; exact values print as "num/den".

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hankel/scalar.hpp"

namespace hankel {

enum class Status { Pass, Fail, Info };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Info: return "INFO";
  }
  return "INFO";
}

inline Status parse_status(const std::string& s) {
  if (s == "PASS") return Status::Pass;
  if (s == "FAIL") return Status::Fail;
  if (s == "INFO") return Status::Info;
  throw std::invalid_argument("unknown status '" + s + "'");
}

inline std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string fmt_rational(const Rational& q) { return to_fraction_string(q); }

struct ReportItem {
  std::string name;
  std::string paper;
  std::string computed;
  double tol = 0.0;
  Status status = Status::Info;

  friend bool operator==(const ReportItem&, const ReportItem&) = default;
};

// PASS iff |computed - claim| <= tol.
inline ReportItem compare_item(std::string name, std::string claim_text, double claim, double computed, double tol) {
  const bool ok = std::abs(computed - claim) <= tol;
  return {std::move(name), std::move(claim_text), fmt_real(computed), tol, ok ? Status::Pass : Status::Fail};
}

inline ReportItem exact_item(std::string name, const Rational& claim, const Rational& computed) {
  return {std::move(name), fmt_rational(claim), fmt_rational(computed), 0.0, claim == computed ? Status::Pass : Status::Fail};
}

inline ReportItem info_item(std::string name, std::string claim, std::string computed) {
  return {std::move(name), std::move(claim), std::move(computed), 0.0, Status::Info};
}

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ReportItem> items;
  double runtime_s = 0.0;
  std::uint64_t seed = 0;

  bool any_fail() const {
    for (const auto& i : items)
      if (i.status == Status::Fail) return true;
    return false;
  }
  int exit_code() const { return any_fail() ? 1 : 0; }

  const ReportItem* find(const std::string& name) const {
    for (const auto& i : items)
      if (i.name == name) return &i;
    return nullptr;
  }

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

// ---- JSON ------------------------------------------------------------------------

inline nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::array();
  for (const auto& [k, v] : r.parameters) params.push_back({{"name", k}, {"value", v}});
  j["parameters"] = params;
  j["seed"] = r.seed;
  j["runtime_s"] = r.runtime_s;
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const auto& i : r.items) {
    nlohmann::ordered_json e;
    e["name"] = i.name;
    e["paper"] = i.paper;
    e["computed"] = i.computed;
    e["tol"] = i.tol;
    e["status"] = to_string(i.status);
    items.push_back(std::move(e));
  }
  j["items"] = items;
  return j;
}

inline RunReport report_from_json(const nlohmann::ordered_json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  for (const auto& p : j.at("parameters")) r.parameters.emplace_back(p.at("name").get<std::string>(), p.at("value").get<std::string>());
  r.seed = j.at("seed").get<std::uint64_t>();
  r.runtime_s = j.at("runtime_s").get<double>();
  for (const auto& e : j.at("items")) {
    r.items.push_back({e.at("name").get<std::string>(), e.at("paper").get<std::string>(), e.at("computed").get<std::string>(),
                       e.at("tol").get<double>(), parse_status(e.at("status").get<std::string>())});
  }
  return r;
}

// ---- CSV / text ----------------------------------------------------------------------

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv(const RunReport& r, std::ostream& os) {
  os << "name,paper,computed,tol,status\n";
  for (const auto& i : r.items)
    os << csv_field(i.name) << ',' << csv_field(i.paper) << ',' << csv_field(i.computed) << ',' << fmt_real(i.tol) << ','
       << to_string(i.status) << '\n';
}

inline void write_text(const RunReport& r, std::ostream& os) {
  std::size_t wn = 4, wp = 5, wc = 8;
  for (const auto& i : r.items) {
    wn = std::max(wn, i.name.size());
    wp = std::max(wp, i.paper.size());
    wc = std::max(wc, i.computed.size());
  }
  os << std::left << std::setw(static_cast<int>(wn)) << "name" << "  " << std::setw(static_cast<int>(wp)) << "paper" << "  "
     << std::setw(static_cast<int>(wc)) << "computed" << "  " << std::setw(8) << "tol" << "  status\n";
  for (const auto& i : r.items)
    os << std::left << std::setw(static_cast<int>(wn)) << i.name << "  " << std::setw(static_cast<int>(wp)) << i.paper << "  "
       << std::setw(static_cast<int>(wc)) << i.computed << "  " << std::setw(8) << fmt_real(i.tol) << "  " << to_string(i.status)
       << '\n';
}

enum class Format { Json, Csv, Text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw std::invalid_argument("unknown report format '" + s + "'");
}

inline void write_report(const RunReport& r, Format f, std::ostream& os) {
  switch (f) {
    case Format::Json: os << to_json(r).dump(2) << '\n'; break;
    case Format::Csv: write_csv(r, os); break;
    case Format::Text: write_text(r, os); break;
  }
}

inline void emit_report(const RunReport& r, Format f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report file '" + path + "' for writing");
  write_report(r, f, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing report file '" + path + "'");
}

}  // namespace hankel

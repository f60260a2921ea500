#include <cmath>
#include <sstream>

#include <json.hpp>

#include "hypersine/suite.hpp"

namespace hypersine {

namespace {

using Json = nlohmann::ordered_json;

const char* measure_name(CheckMeasure m) {
  switch (m) {
    case CheckMeasure::abs: return "abs";
    case CheckMeasure::rel: return "rel";
    case CheckMeasure::exceeds: return "exceeds";
    case CheckMeasure::flag: return "flag";
  }
  return "abs";
}

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json check_json(const CheckResult& c) {
  Json j;
  j["check"] = c.name;
  j["pass"] = c.pass;
  j["max_abs"] = number(c.report.max_abs);
  j["max_rel"] = number(c.report.max_rel);
  j["witness"] = c.report.witness;
  j["samples"] = c.report.samples;
  j["measure"] = measure_name(c.measure);
  j["tolerance"] = number(c.tolerance);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

struct Summary {
  double max_abs = 0.0;
  double max_rel = 0.0;
  std::string witness;
  std::size_t samples = 0;
};

Summary summarize(const SuiteReport& r) {
  Summary s;
  for (const auto& c : r.checks) {
    s.samples += c.report.samples;
    if (c.measure == CheckMeasure::abs || c.measure == CheckMeasure::rel)
      s.max_rel = std::max(s.max_rel, c.report.max_rel);
  }
  if (const auto* w = r.worst()) {
    s.max_abs = w->report.max_abs;
    s.witness = w->name + (w->report.witness.empty() ? "" : ": " + w->report.witness);
  }
  return s;
}

Json report_json(const SuiteReport& r, bool include_wall_time) {
  const auto s = summarize(r);
  Json j;
  j["suite"] = r.suite;
  j["pass"] = r.pass;
  j["max_abs"] = number(s.max_abs);
  j["max_rel"] = number(s.max_rel);
  j["witness"] = s.witness;
  j["samples"] = s.samples;
  if (include_wall_time) j["wall_time"] = r.wall_time;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_json(c));
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(17);
  ss << x;
  return ss.str();
}

}  // namespace

std::string to_json(const SuiteReport& report, bool include_wall_time) {
  return report_json(report, include_wall_time).dump(2) + "\n";
}

std::string to_json(const std::vector<SuiteReport>& reports, bool include_wall_time) {
  Json j;
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  j["pass"] = pass;
  j["reports"] = Json::array();
  for (const auto& r : reports) j["reports"].push_back(report_json(r, include_wall_time));
  return j.dump(2) + "\n";
}

std::string to_csv(const std::vector<SuiteReport>& reports) {
  std::string out = "suite,check,max_abs,max_rel,witness,samples,pass,tolerance,measure\n";
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      out += csv_field(r.suite) + "," + csv_field(c.name) + "," + fmt(c.report.max_abs) + "," +
             fmt(c.report.max_rel) + "," + csv_field(c.report.witness) + "," + std::to_string(c.report.samples) +
             "," + (c.pass ? "true" : "false") + "," + fmt(c.tolerance) + "," + measure_name(c.measure) + "\n";
    }
  return out;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::string out = "element,m_re,m_im,f_re,f_im,residual\n";
  for (const auto& r : rows)
    out += csv_field(r.element) + "," + fmt(r.m.real()) + "," + fmt(r.m.imag()) + "," + fmt(r.f.real()) + "," +
           fmt(r.f.imag()) + "," + fmt(r.residual) + "\n";
  return out;
}

}  // namespace hypersine

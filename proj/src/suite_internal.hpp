#pragma once

// Helpers shared by the suite implementations.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hypersine/suite.hpp"

namespace hypersine::detail {

inline double tolerance_for(const SuiteConfig& cfg, double fallback) { return cfg.tol.value_or(fallback); }

inline CheckResult check_abs(std::string name, ResidualReport r, double tol, std::string note = {}) {
  CheckResult c{std::move(name), std::move(r), CheckMeasure::abs, tol, false, std::move(note)};
  c.pass = c.report.max_abs <= tol;
  return c;
}

inline CheckResult check_rel(std::string name, ResidualReport r, double tol, std::string note = {}) {
  CheckResult c{std::move(name), std::move(r), CheckMeasure::rel, tol, false, std::move(note)};
  c.pass = c.report.max_rel <= tol;
  return c;
}

inline CheckResult check_exceeds(std::string name, ResidualReport r, double threshold, std::string note = {}) {
  CheckResult c{std::move(name), std::move(r), CheckMeasure::exceeds, threshold, false, std::move(note)};
  c.pass = c.report.max_abs > threshold;
  return c;
}

inline CheckResult check_flag(std::string name, bool ok, std::string note, std::size_t samples = 1) {
  CheckResult c;
  c.name = std::move(name);
  c.measure = CheckMeasure::flag;
  c.pass = ok;
  c.note = std::move(note);
  c.report.samples = samples;
  c.report.max_abs = ok ? 0.0 : 1.0;
  c.report.max_rel = c.report.max_abs;
  return c;
}

/// Dual-vs-finite-difference comparison: |d - fd| / max(|d|, |value|).
inline double fd_relative(Complex dual, Complex fd, Complex value) {
  const double scale = std::max(std::abs(dual), std::abs(value));
  return scale > 0.0 ? std::abs(dual - fd) / scale : std::abs(dual - fd);
}

inline constexpr double kFdStep = 1e-5;
inline constexpr double kFdTol = 1e-6;

inline std::string short_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline std::string lambda_label(Complex l) {
  std::string s = short_number(l.real());
  if (l.imag() != 0.0) s += (l.imag() < 0 ? "" : "+") + short_number(l.imag()) + "i";
  return s;
}

/// Report from a list of per-sample (abs, rel) values with their labels.
inline ResidualReport report_from(const std::vector<SampleResidual>& values, const std::vector<std::string>& labels) {
  ResidualReport r;
  const auto sweep = sweep_max_serial(values.size(), [&](std::size_t i) { return values[i]; });
  r.max_abs = sweep.max_abs;
  r.max_rel = sweep.max_rel;
  r.samples = sweep.samples;
  r.witness_index = sweep.witness;
  if (!labels.empty()) r.witness = labels[sweep.witness];
  return r;
}

void run_compact(const SuiteConfig& cfg, SuiteReport& out);
void run_polyone(const SuiteConfig& cfg, SuiteReport& out);
void run_su2(const SuiteConfig& cfg, SuiteReport& out);
void run_sinsev(const SuiteConfig& cfg, SuiteReport& out);
void run_sturm(const SuiteConfig& cfg, SuiteReport& out);
void run_coset(const SuiteConfig& cfg, SuiteReport& out);

}  // namespace hypersine::detail

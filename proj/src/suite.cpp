#include "hypersine/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "suite_internal.hpp"

namespace hypersine {

void SuiteReport::add(CheckResult c) {
  pass = pass && c.pass;
  checks.push_back(std::move(c));
}

const CheckResult* SuiteReport::worst() const {
  const CheckResult* w = nullptr;
  for (const auto& c : checks) {
    if (c.measure != CheckMeasure::abs && c.measure != CheckMeasure::rel) continue;
    if (!w || detail::worse(c.report.max_abs, w->report.max_abs)) w = &c;
  }
  return w;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"compact", "polyone", "su2", "sinsev", "sturm", "coset"};
  return names;
}

std::string suite_description(const std::string& name) {
  if (name == "compact") return "finite hypergroups: D(theta), S3 classes, Z4; sine spaces and the power identity";
  if (name == "polyone") return "one-variable polynomial hypergroups (Chebyshev, Legendre)";
  if (name == "su2") return "SU(2) hypergroup: convolution, exponentials, sine recurrence";
  if (name == "sinsev") return "product polynomial hypergroups in dimension 2 and 3";
  if (name == "sturm") return "Sturm-Liouville ODEs and the A = 1 cosh hypergroup";
  if (name == "coset") return "double cosets of the affine group";
  throw ArgumentError("unknown suite '" + name + "'");
}

void SuiteConfig::validate() const {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw ArgumentError("unknown suite '" + suite + "'");
  if (n_max && *n_max == 0) throw ArgumentError("n_max must be positive");
  if (!(x_max > 0.0) || !std::isfinite(x_max)) throw ArgumentError("x_max must be positive");
  if (!(h > 0.0) || !(h < x_max)) throw ArgumentError("h must be positive and below x_max");
  if (tol && !(*tol > 0.0)) throw ArgumentError("tolerance must be positive");
  if (samples == 0) throw ArgumentError("samples must be positive");
  for (double t : thetas)
    if (!(t > 0.0 && t < 1.0)) throw ArgumentError("theta must lie in (0, 1)");
  if (alpha && !(*alpha >= -0.5)) throw ArgumentError("alpha must be at least -1/2");
  if (family && *family != "chebyshev" && *family != "legendre")
    throw ArgumentError("family must be chebyshev or legendre");
  for (const auto& l : lambdas)
    if (!std::isfinite(l.real()) || !std::isfinite(l.imag())) throw ArgumentError("lambda must be finite");
}

SuiteReport run_suite(const SuiteConfig& config) {
  config.validate();
  if (config.suite == "all") throw ArgumentError("run_suite: use run_all for 'all'");
  SuiteReport out;
  out.suite = config.suite;
  const auto start = std::chrono::steady_clock::now();
  if (config.suite == "compact") detail::run_compact(config, out);
  else if (config.suite == "polyone") detail::run_polyone(config, out);
  else if (config.suite == "su2") detail::run_su2(config, out);
  else if (config.suite == "sinsev") detail::run_sinsev(config, out);
  else if (config.suite == "sturm") detail::run_sturm(config, out);
  else detail::run_coset(config, out);
  out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<SuiteReport> run_all(const SuiteConfig& config) {
  std::vector<SuiteReport> out;
  for (const auto& name : suite_names()) {
    SuiteConfig c = config;
    c.suite = name;
    out.push_back(run_suite(c));
  }
  return out;
}

FiniteHypergroupSpec s3_class_spec() {
  FiniteHypergroupSpec s;
  s.name = "S3 conjugacy classes";
  s.size = 3;
  s.tensor.assign(27, 0.0);
  for (std::size_t j = 0; j < 3; ++j) {
    s.coeff(0, j, j) = 1.0;
    s.coeff(j, 0, j) = 1.0;
  }
  s.coeff(1, 1, 0) = 1.0 / 3.0;
  s.coeff(1, 1, 2) = 2.0 / 3.0;
  s.coeff(1, 2, 1) = 1.0;
  s.coeff(2, 1, 1) = 1.0;
  s.coeff(2, 2, 0) = 0.5;
  s.coeff(2, 2, 2) = 0.5;
  return s;
}

FiniteHypergroupSpec cyclic_group_spec(std::size_t n) {
  if (n == 0) throw ArgumentError("cyclic_group_spec: n must be positive");
  FiniteHypergroupSpec s;
  s.name = "Z" + std::to_string(n);
  s.size = n;
  s.tensor.assign(n * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.coeff(i, j, (i + j) % n) = 1.0;
  return s;
}

}  // namespace hypersine

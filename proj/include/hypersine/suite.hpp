#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypersine/finite.hpp"
#include "hypersine/hypergroup.hpp"

namespace hypersine {

/// How a check's report is compared with its tolerance.
enum class CheckMeasure {
  abs,       // pass iff max_abs <= tolerance
  rel,       // pass iff max_rel <= tolerance
  exceeds,   // pass iff max_abs > tolerance (falsification: the residual must stay away from 0)
  flag,      // pass decided by the check itself
};

struct CheckResult {
  std::string name;
  ResidualReport report;
  CheckMeasure measure = CheckMeasure::abs;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = true;
  double wall_time = 0.0;  // seconds

  void add(CheckResult c);
  /// The check with the largest max_abs among residual checks (for the summary fields).
  const CheckResult* worst() const;
};

struct SuiteConfig {
  std::string suite;
  /// Optional recurrence file for "polyone"; built-ins otherwise.
  std::optional<std::string> recurrence_file;
  /// Restrict "polyone" to one built-in family ("chebyshev" or "legendre").
  std::optional<std::string> family;
  std::vector<double> thetas;
  std::optional<double> alpha;
  bool a_const = false;
  std::vector<Complex> lambdas;  // empty: suite defaults
  std::optional<std::size_t> n_max;
  double x_max = 5.0;
  double h = 1e-3;
  /// Replaces the tolerance of every residual check (falsification thresholds stay).
  std::optional<double> tol;
  std::uint64_t seed = 20240917;
  std::size_t samples = 1000;
  std::vector<std::string> spec_files;  // extra finite specs for "compact"
  Execution exec = Execution::parallel;

  /// Throws ArgumentError on unknown suites or non-positive ranges/tolerances.
  void validate() const;
};

/// Suites in run order; "all" runs each of them.
const std::vector<std::string>& suite_names();
std::string suite_description(const std::string& name);

SuiteReport run_suite(const SuiteConfig& config);
std::vector<SuiteReport> run_all(const SuiteConfig& config);

/// {"suite", "pass", "max_abs", "max_rel", "witness", "samples", "wall_time", "checks": [...]}
std::string to_json(const SuiteReport& report, bool include_wall_time = true);
std::string to_json(const std::vector<SuiteReport>& reports, bool include_wall_time = true);
/// Header: suite,check,max_abs,max_rel,witness,samples,pass,tolerance,measure
std::string to_csv(const std::vector<SuiteReport>& reports);

/// Built-in finite specs used by the "compact" suite besides D(θ).
FiniteHypergroupSpec s3_class_spec();
FiniteHypergroupSpec cyclic_group_spec(std::size_t n);

struct TableRow {
  std::string element;
  Complex m;
  Complex f;
  double residual = 0.0;
};

struct TabulateConfig {
  std::string family;  // chebyshev | legendre | su2 | sturm | coset | recurrence file via recurrence_file
  std::optional<std::string> recurrence_file;
  Complex lambda{0.0};
  Complex c{1.0};
  long long n_min = 0;
  long long n_max = 10;
  std::optional<double> alpha;
  double x_max = 5.0;
  double h = 1e-3;
};

/**
 * Rows (element, m, f, residual). Discrete families report the one-step
 * residual |f(n*1) - f(n)m(1) - f(1)m(n)|; "sturm" reports the ODE grid
 * residual; "coset" tabulates (x, 0) for x = 1..x_max in steps of h with the
 * residual of the sine equation at ((x,0), (x,0)).
 */
std::vector<TableRow> tabulate(const TabulateConfig& config);
std::string table_to_csv(const std::vector<TableRow>& rows);

}  // namespace hypersine

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypersine/error.hpp"
#include "hypersine/finite.hpp"
#include "hypersine/suite.hpp"

using hypersine::Complex;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// "re" or "re,im".
Complex parse_complex(const std::string& s) {
  std::size_t used = 0;
  const auto comma = s.find(',');
  try {
    const double re = std::stod(s.substr(0, comma), &used);
    if (used != (comma == std::string::npos ? s.size() : comma)) throw std::invalid_argument(s);
    if (comma == std::string::npos) return {re, 0.0};
    const std::string tail = s.substr(comma + 1);
    const double im = std::stod(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::logic_error&) {
    throw hypersine::ArgumentError("cannot parse complex number '" + s + "' (expected re or re,im)");
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw hypersine::ArgumentError("cannot write '" + path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hypersine::ArgumentError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::ordered_json complex_json(Complex z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sine functions on hypergroups: verification suites and tabulation", "hypersine"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");

  std::string out_path;
  std::string format = "json";
  std::vector<std::string> lambda_args;
  hypersine::SuiteConfig cfg;
  bool serial = false;
  bool no_wall_time = false;
  double tol = 0.0;
  std::size_t n_max = 0;

  auto* verify = app.add_subcommand("verify", "Run a verification suite (or 'all')");
  std::string suite;
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--tol", tol, "Override the tolerance of every residual check");
  verify->add_option("--seed", cfg.seed, "Sampling seed");
  verify->add_option("--lambda", lambda_args, "Spectral parameter re[,im]; repeatable");
  verify->add_option("--n-max", n_max, "Index range for discrete suites");
  verify->add_option("--xmax", cfg.x_max, "ODE interval [0, xmax]");
  verify->add_option("--h", cfg.h, "ODE step");
  verify->add_option("--theta", cfg.thetas, "D(theta) parameters; repeatable");
  std::string family;
  verify->add_option("--family", family, "polyone family: chebyshev or legendre");
  std::string recurrence;
  verify->add_option("--recurrence", recurrence, "Recurrence JSON file for polyone");
  double alpha = 0.0;
  auto* alpha_opt = verify->add_option("--alpha", alpha, "Power family A(x) = x^(2 alpha + 1)");
  verify->add_flag("--a-const", cfg.a_const, "Sturm suite: A = 1 only");
  verify->add_option("--samples", cfg.samples, "Random samples per check");
  verify->add_option("--spec", cfg.spec_files, "Extra finite hypergroup spec for compact; repeatable");
  verify->add_flag("--serial", serial, "Disable OpenMP sweeps");
  verify->add_flag("--no-wall-time", no_wall_time, "Omit wall_time from JSON output");
  verify->add_option("--out", out_path, "Write the report to a file");
  verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* tab = app.add_subcommand("tabulate", "Tabulate an exponential and its sine function");
  hypersine::TabulateConfig tcfg;
  std::string tab_lambda = "0", tab_c = "1";
  tab->add_option("--family", tcfg.family, "chebyshev, legendre, su2, sturm or coset");
  tab->add_option("--recurrence", recurrence, "Recurrence JSON file (instead of --family)");
  tab->add_option("--lambda", tab_lambda, "Spectral parameter re[,im]");
  tab->add_option("--c", tab_c, "Sine scale re[,im]");
  tab->add_option("--n-min", tcfg.n_min, "First index");
  tab->add_option("--n-max", tcfg.n_max, "Last index");
  auto* tab_alpha = tab->add_option("--alpha", alpha, "Sturm power family parameter");
  bool tab_const = false;
  tab->add_flag("--a-const", tab_const, "Sturm: A = 1 (default)");
  tab->add_option("--xmax", tcfg.x_max, "Sturm/coset range");
  tab->add_option("--h", tcfg.h, "Sturm/coset step");
  tab->add_option("--out", out_path, "Write CSV to a file");

  auto* space = app.add_subcommand("sine-space", "Sine-function spaces of a finite hypergroup spec");
  std::string spec_path;
  space->add_option("spec", spec_path, "Spec JSON file")->required();
  space->add_option("--tol", tol, "Verification tolerance");
  space->add_option("--out", out_path, "Write JSON to a file");

  auto* list = app.add_subcommand("list", "List suites and tabulation families");
  for (auto* sub : {verify, tab, space, list}) sub->set_help_flag("--help", "Print this help message and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (list->parsed()) {
      for (const auto& name : hypersine::suite_names())
        std::cout << name << "\t" << hypersine::suite_description(name) << "\n";
      std::cout << "tabulate families: chebyshev legendre su2 sturm coset\n";
      return kExitPass;
    }

    if (verify->parsed()) {
      cfg.suite = suite;
      if (verify->count("--tol")) cfg.tol = tol;
      if (verify->count("--n-max")) cfg.n_max = n_max;
      if (!family.empty()) cfg.family = family;
      if (!recurrence.empty()) cfg.recurrence_file = recurrence;
      if (*alpha_opt) cfg.alpha = alpha;
      for (const auto& s : lambda_args) cfg.lambdas.push_back(parse_complex(s));
      cfg.exec = serial ? hypersine::Execution::serial : hypersine::Execution::parallel;
      cfg.validate();
      std::vector<hypersine::SuiteReport> reports;
      if (suite == "all") reports = hypersine::run_all(cfg);
      else reports.push_back(hypersine::run_suite(cfg));
      bool pass = true;
      for (const auto& r : reports) pass = pass && r.pass;
      if (format == "csv") emit(hypersine::to_csv(reports), out_path);
      else if (reports.size() == 1) emit(hypersine::to_json(reports.front(), !no_wall_time), out_path);
      else emit(hypersine::to_json(reports, !no_wall_time), out_path);
      return pass ? kExitPass : kExitFail;
    }

    if (tab->parsed()) {
      if (!recurrence.empty()) tcfg.recurrence_file = recurrence;
      if (tcfg.family.empty() && !tcfg.recurrence_file) throw hypersine::ArgumentError("tabulate needs --family");
      if (*tab_alpha && !tab_const) tcfg.alpha = alpha;
      tcfg.lambda = parse_complex(tab_lambda);
      tcfg.c = parse_complex(tab_c);
      emit(hypersine::table_to_csv(hypersine::tabulate(tcfg)), out_path);
      return kExitPass;
    }

    const double vtol = space->count("--tol") ? tol : hypersine::kVerificationTol;
    const std::string text = read_file(spec_path);
    const auto spec = hypersine::parse_finite_spec(text);
    auto exps = hypersine::parse_listed_exponentials(text);
    if (exps.empty()) exps = hypersine::find_exponentials(spec, vtol);
    nlohmann::ordered_json j;
    j["name"] = spec.name;
    j["size"] = spec.size;
    j["commutative"] = spec.is_commutative();
    j["exponentials"] = nlohmann::ordered_json::array();
    bool pass = true;
    for (const auto& m : exps) {
      hypersine::SineSpaceOptions opts;
      opts.exp_tol = opts.sine_tol = vtol;
      const auto s = hypersine::sine_space(spec, m, opts);
      const bool vanishing = hypersine::compact_vanishing_check(spec, m, s.basis, vtol);
      pass = pass && vanishing;
      nlohmann::ordered_json e;
      e["m"] = nlohmann::ordered_json::array();
      for (const auto& z : m) e["m"].push_back(complex_json(z));
      e["dimension"] = s.dimension();
      e["cutoff"] = s.cutoff;
      e["singular_values"] = s.singular_values;
      e["basis"] = nlohmann::ordered_json::array();
      for (const auto& f : s.basis) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& z : f) row.push_back(complex_json(z));
        e["basis"].push_back(row);
      }
      e["f_times_m_vanishes"] = vanishing;
      j["exponentials"].push_back(e);
    }
    j["pass"] = pass;
    emit(j.dump(2) + "\n", out_path);
    return pass ? kExitPass : kExitFail;
  } catch (const hypersine::ArgumentError& e) {
    std::cerr << "hypersine: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hypersine::Error& e) {
    std::cerr << "hypersine: " << e.what() << "\n";
    return kExitFail;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "hypersine: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  }
}

#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypersine/parallel.hpp"
#include "hypersine/suite.hpp"

using namespace hypersine;

namespace {

SuiteConfig config(const std::string& suite, Execution exec) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.exec = exec;
  cfg.samples = 200;
  return cfg;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("serial and parallel sweeps agree") {
  const auto f = [](std::size_t i) {
    const double x = std::sin(static_cast<double>(i) * 0.37);
    return SampleResidual{std::abs(x), x * x};
  };
  for (std::size_t n : {0u, 1u, 7u, 1000u, 10007u}) {
    const auto a = sweep_max_serial(n, f), b = sweep_max_parallel(n, f);
    CHECK(a.max_abs == b.max_abs);
    CHECK(a.max_rel == b.max_rel);
    CHECK(a.witness == b.witness);
    CHECK(a.samples == b.samples);
  }
  const auto ties = sweep_max_parallel(100, [](std::size_t) { return SampleResidual{1.0, 1.0}; });
  CHECK(ties.witness == 0);
  const auto nan = sweep_max_serial(3, [](std::size_t i) { return SampleResidual{i == 1 ? NAN : 0.0, 0.0}; });
  CHECK(std::isnan(nan.max_abs));
  CHECK(nan.witness == 1);
}

TEST_CASE("every suite passes and matches across execution modes") {
  for (const auto& name : suite_names()) {
    const auto par = run_suite(config(name, Execution::parallel));
    const auto ser = run_suite(config(name, Execution::serial));
    CHECK_MESSAGE(par.pass, name);
    CHECK(to_json(par, false) == to_json(ser, false));
    CHECK(to_json(par, false) == to_json(run_suite(config(name, Execution::parallel)), false));
  }
}

TEST_CASE("json report shape") {
  const auto rep = run_suite(config("su2", Execution::serial));
  const auto j = nlohmann::json::parse(to_json(rep));
  CHECK(j["suite"] == "su2");
  CHECK(j["pass"] == true);
  CHECK(j.contains("wall_time"));
  for (const char* key : {"max_abs", "max_rel", "witness", "samples", "checks"}) CHECK(j.contains(key));
  REQUIRE(!j["checks"].empty());
  for (const char* key : {"check", "pass", "max_abs", "max_rel", "witness", "samples", "measure", "tolerance"})
    CHECK(j["checks"][0].contains(key));
  CHECK_FALSE(nlohmann::json::parse(to_json(rep, false)).contains("wall_time"));

  const auto all = nlohmann::json::parse(to_json(std::vector<SuiteReport>{rep, rep}));
  CHECK(all["reports"].size() == 2);
  CHECK(all["pass"] == true);
}

TEST_CASE("csv report") {
  const auto csv = to_csv({run_suite(config("compact", Execution::serial))});
  CHECK(csv.rfind("suite,check,max_abs,max_rel,witness,samples,pass,tolerance,measure\n", 0) == 0);
}

TEST_CASE("a tightened tolerance fails honestly") {
  auto cfg = config("polyone", Execution::serial);
  cfg.tol = 1e-30;
  const auto rep = run_suite(cfg);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.worst() != nullptr);
  CHECK(rep.worst()->report.max_rel > 1e-30);
}

TEST_CASE("config validation") {
  auto cfg = config("nope", Execution::serial);
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
  cfg.suite = "sturm";
  cfg.h = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
  cfg.h = 1e-3;
  cfg.thetas = {1.5};
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
  cfg.thetas.clear();
  cfg.family = "hermite";
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
  cfg.family.reset();
  cfg.alpha = -0.75;
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
  cfg.alpha.reset();
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("tabulate") {
  TabulateConfig t;
  t.family = "su2";
  t.lambda = 0.0;
  for (const auto& row : tabulate(t)) CHECK(std::abs(row.m - 1.0) < 1e-15);

  t.family = "chebyshev";
  t.lambda = 1.0;
  t.n_max = 5;
  const auto rows = tabulate(t);
  REQUIRE(rows.size() == 6);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    CHECK(std::abs(rows[n].f - static_cast<double>(n * n)) < 1e-12);
    CHECK(rows[n].residual < 1e-12);
  }
  CHECK(rows[3].element == "3");

  t.n_min = 4;
  t.n_max = 2;
  CHECK(tabulate(t).empty());

  t.family = "bogus";
  t.n_min = 0;
  CHECK_THROWS_AS(tabulate(t), ArgumentError);

  const auto csv = table_to_csv(rows);
  CHECK(csv.rfind("element,m_re,m_im,f_re,f_im,residual\n", 0) == 0);
}

}  // TEST_SUITE

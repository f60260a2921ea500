#include <cmath>

#include "hypersine/coset.hpp"
#include "hypersine/poly.hpp"
#include "hypersine/sturm.hpp"
#include "hypersine/su2.hpp"
#include "hypersine/suite.hpp"

namespace hypersine {

namespace {

template <typename Conv, typename F, typename M>
std::vector<TableRow> discrete_rows(const TabulateConfig& cfg, Conv&& conv, F&& f, M&& m) {
  std::vector<TableRow> rows;
  if (cfg.n_min < 0) throw ArgumentError("tabulate: n_min must be nonnegative");
  for (long long i = cfg.n_min; i <= cfg.n_max; ++i) {
    const auto n = static_cast<std::size_t>(i);
    const Complex lhs = integrate(f, conv(n, std::size_t{1}));
    TableRow row;
    row.element = std::to_string(n);
    row.m = m(n);
    row.f = f(n);
    row.residual = std::abs(lhs - row.f * m(1) - f(1) * row.m);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<TableRow> tabulate(const TabulateConfig& cfg) {
  const std::string& fam = cfg.family;
  if (cfg.recurrence_file || fam == "chebyshev" || fam == "legendre") {
    const auto rec = cfg.recurrence_file ? load_recurrence(*cfg.recurrence_file) : builtin_recurrence(fam);
    const auto m = poly_exponential(rec, cfg.lambda);
    const auto f = sine_fn(rec, cfg.c, cfg.lambda);
    return discrete_rows(cfg, [&](std::size_t n, std::size_t k) { return linearize(rec, n, k); }, f, m);
  }
  if (fam == "su2") {
    const Su2Exponential m{cfg.lambda};
    const Su2Sine f{cfg.c, cfg.lambda};
    return discrete_rows(cfg, [](std::size_t n, std::size_t k) { return su2_convolve(n, k); }, f, m);
  }
  if (fam == "sturm") {
    const auto a = cfg.alpha ? SturmLiouvilleFunction::power(*cfg.alpha) : SturmLiouvilleFunction::constant();
    const auto sol = solve_sine(a, cfg.lambda, cfg.c, cfg.x_max, cfg.h);
    std::vector<TableRow> rows;
    rows.reserve(sol.size());
    for (std::size_t i = 0; i < sol.size(); ++i)
      rows.push_back({describe(sol.grid[i]), sol.forcing[i], sol.values[i], sol.residual[i]});
    return rows;
  }
  if (fam == "coset") {
    if (!(cfg.h > 0.0) || !(cfg.x_max >= 1.0)) throw ArgumentError("tabulate coset: need h > 0 and x_max >= 1");
    const auto m = coset_exponential(cfg.lambda);
    const auto f = coset_sine(cfg.c, cfg.lambda);
    std::vector<TableRow> rows;
    const auto steps = static_cast<long long>(std::floor((cfg.x_max - 1.0) / cfg.h + 1e-9));
    for (long long i = 0; i <= steps; ++i) {
      const double x = 1.0 + static_cast<double>(i) * cfg.h;
      const AffineElement p(x, 0.0);
      const DoubleCoset d(x, 0.0);
      const Complex lhs = coset_apply(f, p, p);
      rows.push_back({describe(x), m(d), f(d), std::abs(lhs - 2.0 * f(d) * m(d))});
    }
    return rows;
  }
  throw ArgumentError("unknown tabulate family '" + fam + "'");
}

}  // namespace hypersine

#include "hypersine/sturm.hpp"

#include <algorithm>
#include <cmath>

#include "hypersine/dual.hpp"

namespace hypersine {

SturmLiouvilleFunction SturmLiouvilleFunction::power(double alpha) {
  if (!(alpha >= -0.5)) throw ArgumentError("Sturm-Liouville power family needs alpha >= -1/2");
  const double nu = 2.0 * alpha + 1.0;
  return {"power(alpha=" + describe(alpha) + ")", [nu](double x) { return std::pow(x, nu); },
          [nu](double x) { return nu / x; }, nu};
}

SturmLiouvilleFunction SturmLiouvilleFunction::constant() {
  return {"constant", [](double) { return 1.0; }, [](double) { return 0.0; }, 0.0};
}

namespace {

template <typename S>
struct State {
  S p, dp, q, dq;
};

template <typename S>
State<S> axpy(const State<S>& y, double t, const State<S>& k) {
  return {y.p + k.p * t, y.dp + k.dp * t, y.q + k.q * t, y.dq + k.dq * t};
}

// p'' = λp - r p',  q'' = λq - r q' + c p
template <typename S>
State<S> rhs(const SturmLiouvilleFunction& a, const S& lambda, Complex c, double x, const State<S>& y) {
  const double r = a.log_derivative(x);
  return {y.dp, lambda * y.p - y.dp * r, y.dq, lambda * y.q - y.dq * r + y.p * c};
}

// Even power series through x^8: a_k = λ a_{k-1} / (2k(2k-1+ν)),
// b_k = (λ b_{k-1} + c a_{k-1}) / (2k(2k-1+ν)).
template <typename S>
State<S> series_state(double nu, const S& lambda, Complex c, double x) {
  S a = S(1.0), b = S(0.0);
  State<S> out{S(1.0), S(0.0), S(0.0), S(0.0)};
  double pw = 1.0;  // x^{2k-1}
  for (int k = 1; k <= 4; ++k) {
    const double denom = 2.0 * k * (2.0 * k - 1.0 + nu);
    const S b_next = (lambda * b + a * c) / denom;
    a = lambda * a / denom;
    b = b_next;
    const double dpw = (k == 1 ? x : pw * x * x);
    pw = dpw;
    out.p = out.p + a * (dpw * x);
    out.dp = out.dp + a * (2.0 * k * dpw);
    out.q = out.q + b * (dpw * x);
    out.dq = out.dq + b * (2.0 * k * dpw);
  }
  return out;
}

struct Grid {
  std::vector<double> x;
  double h;
  std::size_t start;
};

Grid make_grid(double x_max, double h) {
  if (!(h > 0.0) || !(x_max > 0.0)) throw ArgumentError("ODE grid needs h > 0 and x_max > 0");
  const auto n = static_cast<std::size_t>(std::llround(x_max / h));
  if (n < 2) throw ArgumentError("ODE grid: x_max/h must be at least 2");
  Grid g;
  g.h = h;
  g.x.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) g.x[i] = static_cast<double>(i) * h;
  const double x_start = std::max(10.0 * h, 1e-3);
  g.start = std::min(n, static_cast<std::size_t>(std::ceil(x_start / h - 1e-9)));
  return g;
}

bool out_of_range(const Complex& v) { return !std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) > kSturmOverflow; }
bool out_of_range(const DualScalar& v) { return out_of_range(v.val) || out_of_range(v.deriv); }

template <typename S>
std::vector<State<S>> integrate(const SturmLiouvilleFunction& a, const S& lambda, Complex c, const Grid& g,
                                const State<S>* initial_at_start) {
  std::vector<State<S>> ys(g.x.size());
  for (std::size_t i = 0; i <= g.start; ++i) ys[i] = series_state(a.singular_index, lambda, c, g.x[i]);
  if (initial_at_start) {
    for (std::size_t i = 0; i < g.start; ++i) ys[i] = State<S>{S(0.0), S(0.0), S(0.0), S(0.0)};
    ys[g.start] = *initial_at_start;
  }
  const double h = g.h;
  for (std::size_t i = g.start; i + 1 < g.x.size(); ++i) {
    const double x = g.x[i];
    const auto& y = ys[i];
    const auto k1 = rhs(a, lambda, c, x, y);
    const auto k2 = rhs(a, lambda, c, x + 0.5 * h, axpy(y, 0.5 * h, k1));
    const auto k3 = rhs(a, lambda, c, x + 0.5 * h, axpy(y, 0.5 * h, k2));
    const auto k4 = rhs(a, lambda, c, x + h, axpy(y, h, k3));
    State<S> next;
    next.p = y.p + (k1.p + k2.p * 2.0 + k3.p * 2.0 + k4.p) * (h / 6.0);
    next.dp = y.dp + (k1.dp + k2.dp * 2.0 + k3.dp * 2.0 + k4.dp) * (h / 6.0);
    next.q = y.q + (k1.q + k2.q * 2.0 + k3.q * 2.0 + k4.q) * (h / 6.0);
    next.dq = y.dq + (k1.dq + k2.dq * 2.0 + k3.dq * 2.0 + k4.dq) * (h / 6.0);
    if (out_of_range(next.p) || out_of_range(next.dp) || out_of_range(next.q) || out_of_range(next.dq))
      throw RangeError("ODE solution left the representable range near x = " + describe(g.x[i + 1]));
    ys[i + 1] = next;
  }
  return ys;
}

// Finite-difference substitution residual of u'' + r u' - λu - c·forcing.
void fill_residual(const SturmLiouvilleFunction& a, OdeSolution& sol) {
  const std::size_t n = sol.size();
  sol.residual.assign(n, 0.0);
  sol.residual_bound = 0.0;
  const double h = sol.h;
  for (std::size_t i = sol.start_index + 1; i + 1 < n; ++i) {
    const Complex u2 = (sol.values[i + 1] - 2.0 * sol.values[i] + sol.values[i - 1]) / (h * h);
    const Complex u1 = (sol.values[i + 1] - sol.values[i - 1]) / (2.0 * h);
    Complex res = u2 + a.log_derivative(sol.grid[i]) * u1 - sol.lambda * sol.values[i];
    if (!sol.forcing.empty()) res -= sol.c * sol.forcing[i];
    sol.residual[i] = std::abs(res);
    sol.residual_bound = std::max(sol.residual_bound, sol.residual[i]);
  }
}

}  // namespace

OdeSolution solve_phi(const SturmLiouvilleFunction& a, Complex lambda, double x_max, double h) {
  const auto g = make_grid(x_max, h);
  const auto ys = integrate<Complex>(a, lambda, Complex(0.0), g, nullptr);
  OdeSolution sol;
  sol.grid = g.x;
  sol.lambda = lambda;
  sol.c = 0.0;
  sol.h = h;
  sol.start_index = g.start;
  for (const auto& y : ys) {
    sol.values.push_back(y.p);
    sol.derivs.push_back(y.dp);
  }
  fill_residual(a, sol);
  return sol;
}

OdeSolution solve_sine(const SturmLiouvilleFunction& a, Complex lambda, Complex c, double x_max, double h) {
  const auto g = make_grid(x_max, h);
  const auto ys = integrate<Complex>(a, lambda, c, g, nullptr);
  OdeSolution sol;
  sol.grid = g.x;
  sol.lambda = lambda;
  sol.c = c;
  sol.h = h;
  sol.start_index = g.start;
  for (const auto& y : ys) {
    sol.values.push_back(y.q);
    sol.derivs.push_back(y.dq);
    sol.forcing.push_back(y.p);
  }
  fill_residual(a, sol);
  return sol;
}

OdeSolution dlambda_phi(const SturmLiouvilleFunction& a, Complex lambda, double x_max, double h) {
  const auto g = make_grid(x_max, h);
  const auto ys = integrate<DualScalar>(a, variable(lambda), Complex(0.0), g, nullptr);
  OdeSolution sol;
  sol.grid = g.x;
  sol.lambda = lambda;
  sol.c = 1.0;  // ∂_λ of the Φ equation: g'' + r g' = λ g + Φ
  sol.h = h;
  sol.start_index = g.start;
  for (const auto& y : ys) {
    sol.values.push_back(y.p.deriv);
    sol.derivs.push_back(y.dp.deriv);
    sol.forcing.push_back(y.p.val);
  }
  fill_residual(a, sol);
  return sol;
}

OdeSolution solve_homogeneous(const SturmLiouvilleFunction& a, Complex lambda, Complex u0, Complex du0, double x_max,
                              double h) {
  const auto g = make_grid(x_max, h);
  const State<Complex> init{u0, du0, Complex(0.0), Complex(0.0)};
  const auto ys = integrate<Complex>(a, lambda, Complex(0.0), g, &init);
  OdeSolution sol;
  sol.grid = g.x;
  sol.lambda = lambda;
  sol.c = 0.0;
  sol.h = h;
  sol.start_index = g.start;
  for (const auto& y : ys) {
    sol.values.push_back(y.p);
    sol.derivs.push_back(y.dp);
  }
  fill_residual(a, sol);
  return sol;
}

double max_grid_difference(const OdeSolution& u, const OdeSolution& v) {
  if (u.size() != v.size()) throw ArgumentError("max_grid_difference: grids differ");
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) d = std::max(d, std::abs(u.values[i] - v.values[i]));
  return d;
}

Complex sinhc(Complex z) {
  if (std::abs(z) < 1e-2) {
    const Complex z2 = z * z;
    return 1.0 + z2 / 6.0 + z2 * z2 / 120.0 + z2 * z2 * z2 / 5040.0;
  }
  return std::sinh(z) / z;
}

Complex cosh_sqrt(Complex lambda, double x) { return std::cosh(std::sqrt(lambda) * x); }

Complex dlambda_cosh_sqrt(Complex lambda, double x) { return 0.5 * x * x * sinhc(std::sqrt(lambda) * x); }

FiniteMeasure<double> CoshHypergroup::convolve(double x, double y) const {
  if (x < 0.0 || y < 0.0) throw ArgumentError("cosh hypergroup lives on [0, inf)");
  return FiniteMeasure<double>({{x + y, 0.5}, {std::abs(x - y), 0.5}});
}

CoshHypergroupCheck cosh_hypergroup_check(Complex lambda, std::span<const std::pair<double, double>> samples,
                                          Execution exec) {
  const CoshHypergroup hg;
  const auto m = [lambda](double x) { return cosh_sqrt(lambda, x); };
  const auto f = [lambda](double x) { return dlambda_cosh_sqrt(lambda, x); };
  return {exp_residual(hg, m, samples, exec), sine_residual(hg, f, m, samples, exec)};
}

}  // namespace hypersine

// Acceptance run: one PASS/FAIL line per criterion, exit code 1 if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hypersine/coset.hpp"
#include "hypersine/error.hpp"
#include "hypersine/finite.hpp"
#include "hypersine/multipoly.hpp"
#include "hypersine/poly.hpp"
#include "hypersine/sampling.hpp"
#include "hypersine/sturm.hpp"
#include "hypersine/su2.hpp"
#include "hypersine/suite.hpp"

using namespace hypersine;

namespace {

constexpr double kFdStep = 1e-5;
constexpr double kFdTol = 1e-6;
constexpr std::uint64_t kSeed = 20240917;

struct Tally {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", value);
    if (!detail.empty()) detail += "; ";
    detail += what + "=" + buf;
    if (!ok) {
      pass = false;
      detail += " (over)";
    }
  }
  void flag(bool ok, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? " ok" : " FAILED");
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double fd_rel(Complex dual, Complex fd, Complex value) {
  const double scale = std::max(std::abs(dual), std::abs(value));
  return scale > 0.0 ? std::abs(dual - fd) / scale : std::abs(dual - fd);
}

const std::vector<Complex> kPolyLambdas{0.3, 0.7, 1.0, 1.5, {0.5, 0.5}};

Tally criterion1() {
  Tally t;
  const auto t0 = std::chrono::steady_clock::now();
  const auto pairs = index_pairs(64);
  for (const auto& rec : {ThreeTermRecurrence::chebyshev(), ThreeTermRecurrence::legendre()}) {
    const PolynomialHypergroup hg(rec, 64);
    double worst = 0.0;
    for (const auto& l : kPolyLambdas) {
      const auto r = sine_residual(hg, sine_fn(rec, 1.0, l, 128), poly_exponential(rec, l, 128), std::span(pairs));
      worst = std::max(worst, r.max_rel);
    }
    t.require(worst <= 1e-9, rec.name() + " rel", worst);
  }
  const double secs = seconds_since(t0);
  t.require(secs < 5.0, "seconds", secs);
  return t;
}

Tally criterion2() {
  Tally t;
  Sampler rng(kSeed);
  double worst = 0.0;
  for (const auto& rec : {ThreeTermRecurrence::chebyshev(), ThreeTermRecurrence::legendre()}) {
    const PolynomialHypergroup hg(rec, 64);
    for (int draw = 0; draw < 20; ++draw) {
      const Complex lambda(rng.uniform(-1.5, 1.5), draw % 2 ? rng.uniform(-1.0, 1.0) : 0.0);
      const Complex f1(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
      try {
        const auto r = reconstruct_sine(hg, lambda, f1, 64, 1e-9);
        worst = std::max(worst, r.deviation.max_rel);
      } catch (const TheoremViolation& e) {
        t.flag(false, e.what());
      }
    }
  }
  t.require(worst <= 1e-9, "max rel", worst);
  return t;
}

Tally criterion3() {
  Tally t;
  const double exact = 4.0 * std::numeric_limits<double>::epsilon();
  for (double theta : {0.1, 0.25, 0.5, 0.9}) {
    const auto spec = dtheta_spec(theta);
    const FiniteHypergroup hg(spec);
    const auto pairs = all_pairs<std::size_t>(hg.elements());
    const std::vector<Complex> m0{1.0, 1.0}, m1{1.0, -theta};
    const std::size_t dim = sine_space(spec, m0).dimension() + sine_space(spec, m1).dimension();
    const double res = exp_residual(hg, TabulatedFunction(m1), std::span(pairs)).max_abs;
    t.flag(dim == 0, "theta=" + std::to_string(theta).substr(0, 4) + " dim 0");
    t.require(res <= exact, "exp", res);
  }
  return t;
}

Tally criterion4() {
  Tally t;
  double worst = 0.0;
  for (double theta : {0.1, 0.25, 0.5, 0.9}) {
    const auto spec = dtheta_spec(theta);
    const FiniteHypergroup hg(spec);
    const std::vector<Complex> m1{1.0, -theta};
    for (const auto& f : sine_space(spec, m1).basis)
      worst = std::max(worst, power_identity_check(hg, TabulatedFunction(f), TabulatedFunction(m1), std::size_t{1},
                                                   std::size_t{1}, 8)
                                  .max_abs);
    const TabulatedFunction zero(std::vector<Complex>{0.0, 0.0});
    for (std::size_t x : {0u, 1u})
      worst = std::max(worst, power_identity_check(hg, zero, TabulatedFunction(m1), x, std::size_t{1}, 8).max_abs);
  }
  const PolynomialHypergroup cheb(ThreeTermRecurrence::chebyshev(), 64);
  for (double l : {0.9, 0.4}) {
    const auto m = poly_exponential(cheb.recurrence(), l);
    const auto f = sine_fn(cheb.recurrence(), 1.0, l);
    for (auto [x, y] : {std::pair<std::size_t, std::size_t>{1, 2}, {0, 1}, {3, 1}})
      worst = std::max(worst, power_identity_check(cheb, f, m, x, y, 8).max_abs);
  }
  t.require(worst <= 1e-10, "power identity", worst);

  bool vanishing = true;
  std::size_t bases = 0;
  for (const char* name : {"s3_classes.json", "z4.json", "dtheta_025.json"}) {
    const std::string path = std::string(HYPERSINE_DATA_DIR) + "/" + name;
    const auto spec = load_finite_spec(path);
    for (const auto& m : find_exponentials(spec)) {
      const auto space = sine_space(spec, m);
      vanishing = vanishing && compact_vanishing_check(spec, m, space.basis);
      ++bases;
    }
  }
  t.flag(vanishing && bases > 0, "f*m vanishes on " + std::to_string(bases) + " bases");
  return t;
}

Tally criterion5() {
  Tally t;
  const auto d11 = su2_convolve(1, 1);
  t.flag(d11.size() == 2 && d11.weight_of(0) == 0.25 && d11.weight_of(2) == 0.75, "d1*d1 exact");

  double mass = 0.0;
  for (std::size_t k = 0; k <= 100; ++k)
    for (std::size_t n = 0; n <= 100; ++n) mass = std::max(mass, std::abs(su2_convolve(k, n).mass() - 1.0));
  t.require(mass <= 1e-12, "weight sums", mass);

  const Su2Hypergroup hg;
  const auto pairs = index_pairs(40);
  double sine = 0.0, prop = 0.0;
  for (const Complex l : {Complex(0.3), Complex(0.5, 0.2), Complex(1.0)}) {
    sine = std::max(sine, sine_residual(hg, Su2Sine{1.0, l}, Su2Exponential{l}, std::span(pairs)).max_rel);
    for (const Complex f1 : {Complex(1.0), Complex(0.7, -0.2)}) {
      const auto f = su2_propagate_sine(l, f1, 40);
      const Complex c = f1 / std::sinh(l);
      for (std::size_t n = 0; n <= 40; ++n) {
        const Complex e = c * su2_dphi(n, l);
        prop = std::max(prop, std::abs(f[n] - e) / std::max(1.0, std::abs(e)));
      }
    }
  }
  t.require(sine <= 1e-9, "sine rel", sine);
  const auto additive =
      sine_residual(hg, su2_additive(1.0), [](std::size_t) { return Complex(1.0); }, std::span(pairs)).max_abs;
  t.require(additive <= 1e-10, "additive", additive);
  t.require(prop <= 1e-8, "propagation", prop);
  return t;
}

Tally criterion6() {
  Tally t;
  const auto cheb = ThreeTermRecurrence::chebyshev();
  const auto leg = ThreeTermRecurrence::legendre();
  struct Case {
    std::vector<ThreeTermRecurrence> factors;
    std::vector<Complex> lambda;
    std::vector<Complex> c;
  };
  const std::vector<Case> cases{{{cheb, cheb}, {0.7, 0.3}, {1.0, 2.0}},
                                {{cheb, leg, cheb}, {0.7, 0.3, {0.5, 0.2}}, {1.0, 2.0, {0.0, -0.5}}}};
  double sine = 0.0, fit = 0.0;
  for (const auto& cs : cases) {
    const ProductPolyHypergroup hg(cs.factors, 24);
    const auto elems = multi_indices_box(hg.dimension(), 12);
    std::vector<std::pair<MultiIndex, MultiIndex>> pairs;
    if (hg.dimension() == 2) {
      for (const auto& x : elems)
        for (const auto& y : elems) pairs.emplace_back(x, y);
    } else {
      Sampler rng(kSeed);
      for (int i = 0; i < 4000; ++i) {
        const auto pick = [&] { return elems[static_cast<std::size_t>(rng.unit() * static_cast<double>(elems.size()))]; };
        pairs.emplace_back(pick(), pick());
      }
    }
    const auto f = multi_sine(hg, cs.c, cs.lambda);
    const ProductExponential m{&hg, cs.lambda};
    sine = std::max(sine, sine_residual(hg, f, m, std::span(std::as_const(pairs))).max_rel);
    const auto fitted = fit_coefficients(hg, f, cs.lambda, 6);
    for (std::size_t j = 0; j < cs.c.size(); ++j) fit = std::max(fit, std::abs(fitted.c[j] - cs.c[j]));
    fit = std::max(fit, fitted.verification.max_abs);
  }
  t.require(sine <= 1e-9, "sine rel", sine);
  t.require(fit <= 1e-9, "fit round trip", fit);
  return t;
}

Tally criterion7() {
  Tally t;
  const auto t0 = std::chrono::steady_clock::now();
  const auto one = SturmLiouvilleFunction::constant();
  const auto sq = SturmLiouvilleFunction::power(0.5);
  double phi = 0.0, dl = 0.0, zero = 0.0;
  for (const Complex l : {Complex(0.5), Complex(1.0), Complex(2.0), Complex(1.0, 0.5)}) {
    const auto s = solve_phi(one, l, 5.0, 1e-3);
    for (std::size_t i = 0; i < s.size(); ++i) phi = std::max(phi, std::abs(s.values[i] - cosh_sqrt(l, s.grid[i])));
    for (const auto& a : {one, sq}) {
      dl = std::max(dl, max_grid_difference(dlambda_phi(a, l, 5.0, 1e-3), solve_sine(a, l, 1.0, 5.0, 1e-3)));
      for (const auto& v : solve_homogeneous(a, l, 0.0, 0.0, 5.0, 1e-3).values) zero = std::max(zero, std::abs(v));
    }
  }
  const auto s = solve_phi(sq, 1.0, 5.0, 1e-3);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double x = s.grid[i];
    phi = std::max(phi, std::abs(s.values[i] - (x == 0.0 ? 1.0 : std::sinh(x) / x)));
  }
  t.require(phi <= 1e-6, "Phi", phi);
  t.require(dl <= 1e-5, "dlambda", dl);
  t.require(zero <= 1e-10, "zero data", zero);

  Sampler rng(kSeed);
  std::vector<std::pair<double, double>> xy;
  for (int i = 0; i < 1000; ++i) xy.emplace_back(rng.uniform(0.0, 5.0), rng.uniform(0.0, 5.0));
  double cosh_res = 0.0;
  for (const Complex l : {Complex(0.5), Complex(2.0), Complex(1.0, 0.5)}) {
    const auto c = cosh_hypergroup_check(l, xy);
    cosh_res = std::max({cosh_res, c.exponential.max_rel, c.sine.max_rel});
  }
  t.require(cosh_res <= 1e-10, "cosh hypergroup", cosh_res);
  const double secs = seconds_since(t0);
  t.require(secs < 10.0, "seconds", secs);
  return t;
}

Tally criterion8() {
  Tally t;
  const CosetHypergroup hg;
  const auto aff = sample_affine_pairs(kSeed, 1000);
  const auto pairs = to_coset_pairs(aff);
  double ex = 0.0, si = 0.0;
  for (const Complex l : {Complex(0.0), Complex(1.0), Complex(2.0), Complex(0.5, 0.5)}) {
    ex = std::max(ex, exp_residual(hg, coset_exponential(l), std::span(pairs)).max_rel);
    for (const Complex c : {Complex(1.0), Complex(0.3, -1.2)})
      si = std::max(si, sine_residual(hg, coset_sine(c, l), coset_exponential(l), std::span(pairs)).max_rel);
  }
  t.require(ex <= 1e-12, "exp rel", ex);
  t.require(si <= 1e-10, "sine rel", si);

  // |cosh 3 + cosh 1 - 2 cosh^2 1| in extended precision.
  const double reference = 6.848546939509378;
  const QuadSample s{2.0, 1.0, 1.0, 1.0};
  const double fal = falsify_dalembert_alpha(0.0, 1.0, std::span(&s, 1)).max_abs;
  t.require(std::abs(fal - reference) <= 1e-6, "falsify deviation", std::abs(fal - reference));

  Sampler rng(kSeed);
  const auto dyadic = [&] {
    const double x = std::ldexp(rng.coin() ? -1.0 : 1.0, static_cast<int>(rng.unit() * 9.0) - 4);
    return AffineElement(x, std::ldexp(std::floor(rng.uniform(-64.0, 64.0)), -2));
  };
  bool exact = true;
  for (int i = 0; i < 1000; ++i) {
    const auto p = dyadic(), q = dyadic(), r = dyadic();
    exact = exact && group_mul(group_mul(p, q), r) == group_mul(p, group_mul(q, r));
    exact = exact && group_mul(p, group_inv(p)) == AffineElement(1.0, 0.0);
    const auto conj = group_mul(group_mul(p, AffineElement(-1.0, 0.0)), group_inv(p));
    exact = exact && conj == AffineElement(-1.0, 2.0 * p.u) && !(conj == AffineElement(-1.0, 0.0) && p.u != 0.0);
  }
  t.flag(exact, "associativity and non-normality");
  return t;
}

Tally criterion9() {
  Tally t;
  double worst = 0.0;
  const auto track = [&](Complex d, Complex fd, Complex v) { worst = std::max(worst, fd_rel(d, fd, v)); };
  const std::vector<Complex> lambdas{0.3, 0.7, 1.0, {0.5, 0.2}, {0.5, 0.5}};
  for (const auto& rec : {ThreeTermRecurrence::chebyshev(), ThreeTermRecurrence::legendre()})
    for (const auto& l : lambdas)
      for (std::size_t n = 0; n <= 20; ++n)
        track(eval_dP(rec, n, l), (eval_P(rec, n, l + kFdStep) - eval_P(rec, n, l - kFdStep)) / (2.0 * kFdStep),
              eval_P(rec, n, l));
  for (const auto& l : lambdas)
    for (std::size_t n = 0; n <= 40; ++n)
      track(su2_dphi(n, l), (su2_phi(n, l + kFdStep) - su2_phi(n, l - kFdStep)) / (2.0 * kFdStep), su2_phi(n, l));

  const ProductPolyHypergroup prod({ThreeTermRecurrence::chebyshev(), ThreeTermRecurrence::legendre()}, 8);
  const std::vector<Complex> pl{0.7, {0.3, 0.2}};
  for (const auto& x : multi_indices_by_degree(2, 6)) {
    const auto g = prod.q_grad(x, pl);
    for (std::size_t j = 0; j < 2; ++j) {
      auto up = pl, down = pl;
      up[j] += kFdStep;
      down[j] -= kFdStep;
      track(g[j], (prod.q_eval(x, up) - prod.q_eval(x, down)) / (2.0 * kFdStep), prod.q_eval(x, pl));
    }
  }

  for (const auto& a : {SturmLiouvilleFunction::constant(), SturmLiouvilleFunction::power(0.5)})
    for (const Complex l : {Complex(0.5), Complex(1.0, 0.5)}) {
      const auto phi = solve_phi(a, l), d = dlambda_phi(a, l);
      const auto plus = solve_phi(a, l + kFdStep), minus = solve_phi(a, l - kFdStep);
      for (std::size_t i = 0; i < phi.size(); i += 50)
        track(d.values[i], (plus.values[i] - minus.values[i]) / (2.0 * kFdStep), phi.values[i]);
    }

  for (const auto& [p, q] : to_coset_pairs(sample_affine_pairs(kSeed, 200)))
    for (const Complex l : {Complex(0.0), Complex(1.0), Complex(0.5, 0.5)}) {
      const auto m = coset_exponential(l);
      track(coset_sine(1.0, l)(p), (coset_exponential(l + kFdStep)(p) - coset_exponential(l - kFdStep)(p)) / (2.0 * kFdStep),
            m(p));
    }
  t.require(worst <= kFdTol, "dual vs FD rel", worst);

  SuiteConfig cfg;
  const auto t0 = std::chrono::steady_clock::now();
  const auto first = run_all(cfg);
  const double secs = seconds_since(t0);
  const auto second = run_all(cfg);
  cfg.exec = Execution::serial;
  const auto serial = run_all(cfg);
  bool all_pass = true;
  for (const auto& r : first) all_pass = all_pass && r.pass;
  t.flag(all_pass, "verify all");
  t.flag(to_json(first, false) == to_json(second, false), "repeat run identical");
  t.flag(to_json(first, false) == to_json(serial, false), "serial run identical");
  t.require(secs < 60.0, "verify all seconds", secs);
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Tally()>>> criteria{
      {"polynomial sine functions P_n'(lambda) (Chebyshev, Legendre, n,k <= 64)", criterion1},
      {"reconstruction from f(0)=0, f(1) matches f(1) P_n'(lambda)", criterion2},
      {"D(theta) has only zero sine functions", criterion3},
      {"power identity and f*m vanishing on compact hypergroups", criterion4},
      {"SU(2) convolution, sine functions, additive family, propagation", criterion5},
      {"product polynomial hypergroups d=2,3", criterion6},
      {"Sturm-Liouville solutions and cosh hypergroup", criterion7},
      {"double coset hypergroup of the affine group", criterion8},
      {"dual derivatives vs finite differences; verify all deterministic", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      t.pass = false;
      t.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %zu: %s [%s]\n", t.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, t.detail.c_str());
    if (!t.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

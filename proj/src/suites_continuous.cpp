#include <cmath>

#include "hypersine/coset.hpp"
#include "hypersine/dual.hpp"
#include "hypersine/sampling.hpp"
#include "hypersine/sturm.hpp"
#include "suite_internal.hpp"

namespace hypersine::detail {

namespace {

// |cosh 3 + cosh 1 - 2 cosh² 1|, evaluated independently in extended precision.
constexpr double kDalembertReference = 6.848546939509378;

ResidualReport grid_report(const OdeSolution& sol, const std::function<Complex(double)>& exact) {
  std::vector<SampleResidual> res;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sol.size(); ++i) {
    const Complex e = exact(sol.grid[i]);
    const double r = std::abs(sol.values[i] - e);
    res.push_back({r, r / (1.0 + std::abs(e))});
    labels.push_back("x=" + describe(sol.grid[i]));
  }
  return report_from(res, labels);
}

ResidualReport difference_report(const OdeSolution& u, const OdeSolution& v) {
  std::vector<SampleResidual> res;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = std::abs(u.values[i] - v.values[i]);
    res.push_back({r, r / (1.0 + std::abs(v.values[i]))});
    labels.push_back("x=" + describe(u.grid[i]));
  }
  return report_from(res, labels);
}

AffineElement dyadic_affine(Sampler& rng) {
  const int k = static_cast<int>(rng.unit() * 7.0) - 3;
  const double x = std::ldexp(rng.coin() ? -1.0 : 1.0, k);
  const double u = std::floor(rng.uniform(-80.0, 80.0)) / 8.0;
  return {x, u};
}

}  // namespace

void run_sturm(const SuiteConfig& cfg, SuiteReport& out) {
  const std::vector<Complex> lambdas =
      cfg.lambdas.empty() ? std::vector<Complex>{0.5, 1.0, 2.0, {1.0, 0.5}} : cfg.lambdas;
  const double x_max = cfg.x_max, h = cfg.h;
  const bool use_const = cfg.a_const || !cfg.alpha;
  const bool use_power = !cfg.a_const;
  const double alpha = cfg.alpha.value_or(0.5);
  std::vector<SturmLiouvilleFunction> families;
  if (use_const) families.push_back(SturmLiouvilleFunction::constant());
  if (use_power) families.push_back(SturmLiouvilleFunction::power(alpha));

  if (use_const) {
    const auto a = SturmLiouvilleFunction::constant();
    for (const auto& lambda : lambdas) {
      const auto phi = solve_phi(a, lambda, x_max, h);
      out.add(check_abs("A=1 lambda=" + lambda_label(lambda) + ": Phi vs cosh(sqrt(lambda) x)",
                        grid_report(phi, [&](double x) { return cosh_sqrt(lambda, x); }), tolerance_for(cfg, 1e-6)));
    }
    const auto s1 = solve_sine(a, 1.0, 1.0, x_max, h);
    out.add(check_abs("A=1 lambda=1: sine vs x sinh(x)/2",
                      grid_report(s1, [](double x) { return Complex(0.5 * x * std::sinh(x)); }),
                      tolerance_for(cfg, 1e-5)));
    const auto s0 = solve_sine(a, 0.0, 1.0, x_max, h);
    out.add(check_abs("A=1 lambda=0: sine vs x^2/2", grid_report(s0, [](double x) { return Complex(0.5 * x * x); }),
                      tolerance_for(cfg, 1e-5)));

    Sampler rng(cfg.seed);
    std::vector<std::pair<double, double>> samples;
    samples.reserve(cfg.samples);
    for (std::size_t i = 0; i < cfg.samples; ++i) samples.emplace_back(rng.uniform(0.0, x_max), rng.uniform(0.0, x_max));
    for (const auto& lambda : lambdas) {
      const auto chk = cosh_hypergroup_check(lambda, samples, cfg.exec);
      out.add(check_rel("cosh hypergroup lambda=" + lambda_label(lambda) + ": exponential", chk.exponential,
                        tolerance_for(cfg, 1e-10)));
      out.add(check_rel("cosh hypergroup lambda=" + lambda_label(lambda) + ": sine", chk.sine,
                        tolerance_for(cfg, 1e-10)));

      std::vector<SampleResidual> fd;
      std::vector<std::string> labels;
      for (double x = 0.25; x <= x_max; x += 0.25) {
        const Complex d = cosh(sqrt(variable(lambda)) * x).deriv;
        const Complex num = (cosh_sqrt(lambda + kFdStep, x) - cosh_sqrt(lambda - kFdStep, x)) / (2.0 * kFdStep);
        const double r = std::max(fd_relative(d, num, cosh_sqrt(lambda, x)),
                                  fd_relative(d, dlambda_cosh_sqrt(lambda, x), cosh_sqrt(lambda, x)));
        fd.push_back({std::abs(d - num), r});
        labels.push_back("x=" + describe(x));
      }
      out.add(check_rel("cosh(sqrt(lambda) x) lambda=" + lambda_label(lambda) + ": dual vs finite difference",
                        report_from(fd, labels), kFdTol));
    }
  }

  if (use_power && alpha == 0.5) {
    const auto a = SturmLiouvilleFunction::power(0.5);
    const auto phi = solve_phi(a, 1.0, x_max, h);
    out.add(check_abs("A=x^2 lambda=1: Phi vs sinh(x)/x",
                      grid_report(phi, [](double x) { return Complex(x == 0.0 ? 1.0 : std::sinh(x) / x); }),
                      tolerance_for(cfg, 1e-6)));
    const auto g = dlambda_phi(a, 1.0, x_max, h);
    out.add(check_abs("A=x^2 lambda=1: dPhi vs (x cosh x - sinh x)/(2x)",
                      grid_report(g,
                                  [](double x) {
                                    return Complex(x == 0.0 ? 0.0 : (x * std::cosh(x) - std::sinh(x)) / (2.0 * x));
                                  }),
                      tolerance_for(cfg, 1e-5)));
  }

  for (const auto& a : families) {
    for (const auto& lambda : lambdas) {
      const std::string tag = a.name + " lambda=" + lambda_label(lambda);
      const auto phi = solve_phi(a, lambda, x_max, h);
      double scale = 0.0;
      for (const auto& v : phi.values) scale = std::max(scale, std::abs(v));
      scale *= (1.0 + std::abs(lambda)) * (1.0 + std::abs(lambda));
      ResidualReport ode;
      ode.max_abs = phi.residual_bound;
      ode.max_rel = phi.residual_bound / (1.0 + scale);
      ode.samples = phi.size();
      out.add(check_abs(tag + ": ODE residual within 10 h^2 scale", ode, 10.0 * h * h * (1.0 + scale)));

      const auto g = dlambda_phi(a, lambda, x_max, h);
      const auto s = solve_sine(a, lambda, 1.0, x_max, h);
      out.add(check_abs(tag + ": dPhi vs sine ODE with c=1", difference_report(g, s), tolerance_for(cfg, 1e-5)));

      const auto zero = solve_homogeneous(a, lambda, 0.0, 0.0, x_max, h);
      ResidualReport z;
      for (std::size_t i = 0; i < zero.size(); ++i) z.max_abs = std::max(z.max_abs, std::abs(zero.values[i]));
      z.max_rel = z.max_abs;
      z.samples = zero.size();
      out.add(check_abs(tag + ": homogeneous solution from zero data", z, 1e-10));

      const auto plus = solve_phi(a, lambda + kFdStep, x_max, h);
      const auto minus = solve_phi(a, lambda - kFdStep, x_max, h);
      std::vector<SampleResidual> fd;
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < g.size(); i += 50) {
        const Complex num = (plus.values[i] - minus.values[i]) / (2.0 * kFdStep);
        fd.push_back({std::abs(g.values[i] - num), fd_relative(g.values[i], num, phi.values[i])});
        labels.push_back("x=" + describe(g.grid[i]));
      }
      out.add(check_rel(tag + ": dual vs finite difference", report_from(fd, labels), kFdTol));
    }
  }
}

void run_coset(const SuiteConfig& cfg, SuiteReport& out) {
  const CosetHypergroup hg;
  const std::vector<Complex> lambdas =
      cfg.lambdas.empty() ? std::vector<Complex>{0.0, 1.0, 2.0, {0.5, 0.5}} : cfg.lambdas;
  const auto affine_pairs = sample_affine_pairs(cfg.seed, cfg.samples);
  const auto pairs = to_coset_pairs(affine_pairs);

  for (const auto& lambda : lambdas) {
    const std::string tag = "lambda=" + lambda_label(lambda);
    const auto m = coset_exponential(lambda);
    out.add(check_rel(tag + ": exponential |x|^lambda", exp_residual(hg, m, std::span(pairs), cfg.exec),
                      tolerance_for(cfg, 1e-12)));
    for (const Complex c : {Complex(1.0), Complex(0.3, -1.2)})
      out.add(check_rel(tag + " c=" + lambda_label(c) + ": sine c|x|^lambda ln|x|",
                        sine_residual(hg, coset_sine(c, lambda), m, std::span(pairs), cfg.exec),
                        tolerance_for(cfg, 1e-10)));

    bool equal_terms = true;
    for (const auto& [p, q] : affine_pairs) {
      const Complex a = m(DoubleCoset(p.x * q.x, p.x * q.u + p.u));
      const Complex b = m(DoubleCoset(-p.x * q.x, -p.x * q.u + p.u));
      equal_terms = equal_terms && a == b && coset_apply(m, p, q) == a;
    }
    out.add(check_flag(tag + ": both convolution terms of m coincide", equal_terms, "exact"));

    const auto group = group_sine_check(lambda, affine_pairs, cfg.exec);
    out.add(check_rel(tag + ": group additive ln|x|", group.additive, tolerance_for(cfg, 1e-12)));
    out.add(check_rel(tag + ": group sine ln|x| |x|^lambda", group.sine, tolerance_for(cfg, 1e-12)));

    std::vector<SampleResidual> fd;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < std::min<std::size_t>(pairs.size(), 200); ++i) {
      const double lx = std::log(pairs[i].first.x);
      const Complex d = exp(variable(lambda) * lx).deriv;
      const Complex num = (std::exp((lambda + kFdStep) * lx) - std::exp((lambda - kFdStep) * lx)) / (2.0 * kFdStep);
      const Complex mv = m(pairs[i].first);
      const double r = std::max(fd_relative(d, num, mv), fd_relative(d, coset_sine(1.0, lambda)(pairs[i].first), mv));
      fd.push_back({std::abs(d - num), r});
      labels.push_back(describe(pairs[i].first));
    }
    out.add(check_rel(tag + ": dual vs finite difference", report_from(fd, labels), kFdTol));
  }
  {
    const Complex lambda(1.0, 1.0);
    const auto group = group_sine_check(lambda, affine_pairs, cfg.exec);
    out.add(check_rel("lambda=1+1i: group sine ln|x| |x|^lambda", group.sine, tolerance_for(cfg, 1e-12)));
  }

  std::vector<AffineElement> singles;
  for (const auto& [p, q] : affine_pairs) singles.push_back(p);
  const auto m1 = coset_exponential(1.0);
  const auto f1 = coset_sine(1.0, 1.0);
  const bool compat = verify_compat([&](const AffineElement& g) { return m1(canonical(g)); }, singles) &&
                      verify_compat([&](const AffineElement& g) { return f1(canonical(g)); }, singles);
  out.add(check_flag("functions on canonical representatives are compatible", compat, "four-sign invariance",
                     singles.size()));

  Sampler rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  bool assoc = true, nonnormal = true;
  for (std::size_t i = 0; i < 1000; ++i) {
    const auto p = dyadic_affine(rng), q = dyadic_affine(rng), r = dyadic_affine(rng);
    assoc = assoc && group_mul(group_mul(p, q), r) == group_mul(p, group_mul(q, r));
    const auto conj = group_mul(group_mul(p, AffineElement(-1.0, 0.0)), group_inv(p));
    nonnormal = nonnormal && conj == AffineElement(-1.0, 2.0 * p.u);
    assoc = assoc && group_mul(p, group_inv(p)) == AffineElement(1.0, 0.0);
  }
  out.add(check_flag("associativity and inverses on dyadic triples", assoc, "exact", 1000));
  out.add(check_flag("(x,u)(-1,0)(x,u)^-1 = (-1,2u) on dyadic samples", nonnormal, "exact", 1000));

  std::vector<SampleResidual> assoc_res;
  Sampler rrng(cfg.seed + 1);
  for (std::size_t i = 0; i < 1000; ++i) {
    const auto p = sample_affine(rrng), q = sample_affine(rrng), r = sample_affine(rrng);
    const auto a = group_mul(group_mul(p, q), r), b = group_mul(p, group_mul(q, r));
    const double d = std::max(std::abs(a.x - b.x), std::abs(a.u - b.u));
    assoc_res.push_back({d, d / (1.0 + std::abs(a.x) + std::abs(a.u))});
  }
  out.add(check_rel("associativity on random triples", report_from(assoc_res, {}), 1e-14, "rounding only"));

  const QuadSample recorded{2.0, 1.0, 1.0, 1.0};
  const auto fal = falsify_dalembert_alpha(0.0, 1.0, std::span(&recorded, 1));
  ResidualReport fal_dev;
  fal_dev.max_abs = fal_dev.max_rel = std::abs(fal.max_abs - kDalembertReference);
  fal_dev.samples = 1;
  fal_dev.witness = describe(recorded);
  out.add(check_abs("alpha=1 lambda=0: d'Alembert residual at recorded sample", fal_dev, 1e-6,
                    "residual " + describe(fal.max_abs)));

  std::vector<QuadSample> quads;
  Sampler qrng(cfg.seed + 2);
  for (int i = 0; i < 100; ++i) {
    const auto p = sample_affine(qrng), q = sample_affine(qrng);
    quads.push_back({p.x, p.u, q.x, q.u});
  }
  out.add(check_exceeds("alpha=0.5 lambda=1: d'Alembert residual stays away from 0",
                        falsify_dalembert_alpha(1.0, 0.5, quads), 0.1));

  std::vector<std::pair<double, double>> uv;
  for (int i = 0; i < 1000; ++i) uv.emplace_back(qrng.uniform(-10.0, 10.0), qrng.uniform(-10.0, 10.0));
  out.add(check_rel("square norm equation for u^2", square_norm_check(1.0, uv), 1e-13));

  const QuadraticCandidate cand{1.0, 1.0, 1.0};
  const std::pair<DoubleCoset, DoubleCoset> witness{DoubleCoset(2.0, 1.0), DoubleCoset(3.0, 1.0)};
  out.add(check_exceeds("a=1 lambda=1: u^2 term breaks the sine equation",
                        sine_residual(hg, cand, coset_exponential(1.0), std::span(&witness, 1), Execution::serial),
                        0.5));

  const auto bump = [](const DoubleCoset& c) { return Complex(std::exp(-(c.u - 1.0) * (c.u - 1.0))); };
  const AffineElement p(2.0, 1.0), q(3.0, 0.5);
  ResidualReport nc;
  nc.max_abs = nc.max_rel = std::abs(coset_apply(bump, p, q) - coset_apply(bump, q, p));
  nc.samples = 1;
  nc.witness = "p=" + describe(p) + ", q=" + describe(q);
  out.add(check_exceeds("non-commutativity witness", nc, 1e-3));
}

}  // namespace hypersine::detail

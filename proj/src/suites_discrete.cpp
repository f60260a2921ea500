#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "hypersine/finite.hpp"
#include "hypersine/multipoly.hpp"
#include "hypersine/poly.hpp"
#include "hypersine/sampling.hpp"
#include "hypersine/su2.hpp"
#include "suite_internal.hpp"

namespace hypersine::detail {

namespace {

constexpr double kExactTol = 4.0 * std::numeric_limits<double>::epsilon();

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string vec_label(std::span<const Complex> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + lambda_label(v[i]);
  return s + ")";
}

// Sine space, vanishing and (for nonzero bases) the power identity for one exponential.
void finite_sine_checks(const SuiteConfig& cfg, SuiteReport& out, const FiniteHypergroupSpec& spec,
                        const std::vector<Complex>& m, std::optional<std::size_t> expected_dim) {
  const std::string tag = spec.name + " m=" + vec_label(m);
  const auto space = sine_space(spec, m);
  std::string note = "dimension " + std::to_string(space.dimension());
  const bool dim_ok = !expected_dim || space.dimension() == *expected_dim;
  out.add(check_flag(tag + ": sine-space dimension", dim_ok, note));
  out.add(check_flag(tag + ": f*m vanishes", compact_vanishing_check(spec, m, space.basis, tolerance_for(cfg, kVerificationTol)),
                     note));
  const FiniteHypergroup hg(spec);
  for (std::size_t b = 0; b < space.basis.size(); ++b) {
    const TabulatedFunction f(space.basis[b]), mf(m);
    for (std::size_t y = 1; y < spec.size; ++y)
      out.add(check_abs(tag + ": power identity basis " + std::to_string(b) + " y=" + std::to_string(y),
                        power_identity_check(hg, f, mf, std::size_t{0}, y, 8, kDefaultSupportCap, cfg.exec),
                        tolerance_for(cfg, 1e-10)));
  }
}

void finite_spec_checks(const SuiteConfig& cfg, SuiteReport& out, const FiniteHypergroupSpec& spec,
                        std::vector<std::vector<Complex>> exps, std::optional<std::size_t> expected_count) {
  if (exps.empty()) exps = find_exponentials(spec);
  if (expected_count)
    out.add(check_flag(spec.name + ": exponentials found", exps.size() == *expected_count,
                       std::to_string(exps.size()) + " exponentials"));
  for (const auto& m : exps) {
    out.add(check_abs(spec.name + " m=" + vec_label(m) + ": exponential", finite_exp_residual(spec, m, cfg.exec),
                      tolerance_for(cfg, kVerificationTol)));
    finite_sine_checks(cfg, out, spec, m, std::nullopt);
  }
}

}  // namespace

void run_compact(const SuiteConfig& cfg, SuiteReport& out) {
  const std::vector<double> thetas = cfg.thetas.empty() ? std::vector<double>{0.1, 0.25, 0.5, 0.9} : cfg.thetas;
  for (double theta : thetas) {
    const auto spec = dtheta_spec(theta);
    const FiniteHypergroup hg(spec);
    const std::vector<std::vector<Complex>> exps{{1.0, 1.0}, {1.0, -theta}};
    for (const auto& m : exps) {
      out.add(check_abs(spec.name + " m=" + vec_label(m) + ": exponential", finite_exp_residual(spec, m, cfg.exec),
                        tolerance_for(cfg, kExactTol), "exact up to rounding"));
      finite_sine_checks(cfg, out, spec, m, std::size_t{0});
      const TabulatedFunction zero(std::vector<Complex>(2, 0.0)), mf(m);
      for (std::size_t x = 0; x < 2; ++x)
        out.add(check_abs(spec.name + " m=" + vec_label(m) + ": power identity x=" + std::to_string(x),
                          power_identity_check(hg, zero, mf, x, std::size_t{1}, 8, kDefaultSupportCap, cfg.exec),
                          tolerance_for(cfg, 1e-10)));
    }
  }

  const PolynomialHypergroup cheb(ThreeTermRecurrence::chebyshev(), 24);
  for (double lambda : {0.9, 0.4}) {
    const auto m = poly_exponential(cheb.recurrence(), lambda, 32);
    const auto f = sine_fn(cheb.recurrence(), 1.0, lambda, 32);
    for (const auto& [x, y] : {std::pair<std::size_t, std::size_t>{1, 2}, {0, 1}, {3, 1}})
      out.add(check_abs("chebyshev lambda=" + lambda_label(lambda) + ": power identity",
                        power_identity_check(cheb, f, m, x, y, 8, kDefaultSupportCap, cfg.exec),
                        tolerance_for(cfg, 1e-10)));
  }

  finite_spec_checks(cfg, out, s3_class_spec(), {{1.0, 1.0, 1.0}, {1.0, -1.0, 1.0}, {1.0, 0.0, -0.5}}, std::nullopt);
  auto s3 = s3_class_spec();
  s3.name += " (computed exponentials)";
  finite_spec_checks(cfg, out, s3, {}, std::size_t{3});
  finite_spec_checks(cfg, out, cyclic_group_spec(4), {}, std::size_t{4});
  for (const auto& path : cfg.spec_files) {
    const auto text = read_text(path);
    const auto spec = parse_finite_spec(text);
    auto listed = parse_listed_exponentials(text);
    if (listed.empty() && !spec.is_commutative())
      throw ArgumentError("spec '" + path + "' is not commutative and lists no exponentials");
    finite_spec_checks(cfg, out, spec, std::move(listed), std::nullopt);
  }
}

void run_polyone(const SuiteConfig& cfg, SuiteReport& out) {
  std::vector<ThreeTermRecurrence> recs;
  if (cfg.recurrence_file) recs.push_back(load_recurrence(*cfg.recurrence_file));
  else if (cfg.family) recs.push_back(builtin_recurrence(*cfg.family));
  else recs = {ThreeTermRecurrence::chebyshev(), ThreeTermRecurrence::legendre()};
  const std::vector<Complex> lambdas =
      cfg.lambdas.empty() ? std::vector<Complex>{0.3, 0.7, 1.0, 1.5, {0.5, 0.5}} : cfg.lambdas;
  for (const auto& rec : recs) {
    std::size_t n_max = cfg.n_max.value_or(64);
    if (const auto last = rec.last_index()) n_max = std::min(n_max, (*last + 1) / 2);
    if (n_max == 0) throw ArgumentError("recurrence '" + rec.name() + "' is too short for the polyone suite");
    const auto pairs = index_pairs(n_max);
    const std::string name = rec.name();
    const PolynomialHypergroup hg(rec, n_max);
    ResidualReport mass;
    mass.max_abs = mass.max_rel = hg.table().max_mass_error();
    mass.samples = (n_max + 1) * (n_max + 1);
    out.add(check_abs(name + ": linearization mass", mass, tolerance_for(cfg, 1e-10)));
    ResidualReport neg;
    neg.max_abs = neg.max_rel = std::max(0.0, -hg.table().min_coefficient());
    neg.samples = mass.samples;
    out.add(check_abs(name + ": linearization nonnegative", neg, kLinearizationNegTol));

    for (const auto& lambda : lambdas) {
      const std::string tag = name + " lambda=" + lambda_label(lambda);
      const auto m = poly_exponential(rec, lambda, 2 * n_max);
      const auto f = sine_fn(rec, 1.0, lambda, 2 * n_max);
      out.add(check_rel(tag + ": exponential", exp_residual(hg, m, std::span(pairs), cfg.exec),
                        tolerance_for(cfg, kVerificationTol)));
      out.add(check_rel(tag + ": sine", sine_residual(hg, f, m, std::span(pairs), cfg.exec),
                        tolerance_for(cfg, kVerificationTol)));

      const std::size_t n_fd = std::min<std::size_t>(n_max, 20);
      std::vector<SampleResidual> fd;
      std::vector<std::string> labels;
      for (std::size_t n = 0; n <= n_fd; ++n) {
        const Complex d = eval_dP(rec, n, lambda);
        const Complex num = (eval_P(rec, n, lambda + kFdStep) - eval_P(rec, n, lambda - kFdStep)) / (2.0 * kFdStep);
        const double r = fd_relative(d, num, eval_P(rec, n, lambda));
        fd.push_back({std::abs(d - num), r});
        labels.push_back("n=" + std::to_string(n));
      }
      out.add(check_rel(tag + ": dual vs finite difference", report_from(fd, labels), kFdTol));
    }

    Sampler rng(cfg.seed);
    std::vector<SampleResidual> rec_res;
    std::vector<std::string> labels;
    for (int draw = 0; draw < 20; ++draw) {
      const Complex lambda(rng.uniform(-1.5, 1.5), draw % 2 ? rng.uniform(-0.5, 0.5) : 0.0);
      const Complex f1(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
      const auto r = reconstruct_sine(hg, lambda, f1, n_max, std::numeric_limits<double>::infinity());
      rec_res.push_back({r.deviation.max_abs, r.deviation.max_rel});
      labels.push_back("lambda=" + lambda_label(lambda) + ", f1=" + lambda_label(f1) + ", " + r.deviation.witness);
    }
    out.add(check_rel(name + ": reconstruction from f(1)", report_from(rec_res, labels),
                      tolerance_for(cfg, kVerificationTol)));

    ResidualReport gap;
    gap.max_abs = gap.max_rel = nonmultiplicativity_gap(rec, 0.3, 5);
    gap.samples = 6;
    gap.witness = "lambda=0.3, n<=5";
    out.add(check_exceeds(name + ": P_n'(lambda) not proportional to P_n'(1)P_n(lambda)", gap, 1e-6));
  }
}

void run_su2(const SuiteConfig& cfg, SuiteReport& out) {
  const Su2Hypergroup hg;
  const auto d11 = su2_convolve(1, 1);
  out.add(check_flag("delta_1*delta_1 = 1/4 delta_0 + 3/4 delta_2",
                     d11.size() == 2 && d11.weight_of(0) == 0.25 && d11.weight_of(2) == 0.75, "exact"));

  const auto weight_pairs = index_pairs(100);
  const auto weights = sweep_max(
      weight_pairs.size(),
      [&](std::size_t i) {
        const auto mu = su2_convolve(weight_pairs[i].first, weight_pairs[i].second);
        double low = 0.0;
        for (const auto& a : mu.support()) low = std::min(low, a.weight);
        const double r = std::max(std::abs(mu.mass() - 1.0), -low);
        return SampleResidual{r, r};
      },
      cfg.exec);
  out.add(check_abs("weights sum to 1, k,n<=100", make_report(weights, std::span(weight_pairs)), kConstructionTol));

  const std::size_t n_max = cfg.n_max.value_or(40);
  const auto pairs = index_pairs(n_max);
  const auto one = [](std::size_t) { return Complex(1.0); };
  out.add(check_abs("additive n(n+2)", sine_residual(hg, su2_additive(1.0), one, std::span(pairs), cfg.exec),
                    tolerance_for(cfg, 1e-10)));

  const std::vector<Complex> lambdas = cfg.lambdas.empty() ? std::vector<Complex>{0.3, {0.5, 0.2}, 1.0} : cfg.lambdas;
  for (const auto& lambda : lambdas) {
    const std::string tag = "lambda=" + lambda_label(lambda);
    const Su2Exponential m{lambda};
    const Su2Sine f{1.0, lambda};
    out.add(check_rel(tag + ": exponential", exp_residual(hg, m, std::span(pairs), cfg.exec),
                      tolerance_for(cfg, kVerificationTol)));
    out.add(check_rel(tag + ": sine", sine_residual(hg, f, m, std::span(pairs), cfg.exec),
                      tolerance_for(cfg, kVerificationTol)));
    out.add(check_rel(tag + ": sine recurrence", su2_recurrence_check(f, m, n_max), tolerance_for(cfg, kVerificationTol)));

    const auto psi = su2_propagate_homogeneous(lambda, 0.0, 0.0, n_max);
    std::vector<SampleResidual> psi_res;
    for (const auto& v : psi) psi_res.push_back({std::abs(v), std::abs(v)});
    auto psi_report = report_from(psi_res, {});
    psi_report.witness = "n=" + std::to_string(psi_report.witness_index);
    out.add(check_abs(tag + ": homogeneous recursion from zero data", psi_report, 1e-12));

    std::vector<SampleResidual> fd;
    std::vector<std::string> labels;
    for (std::size_t n = 0; n <= n_max; ++n) {
      const Complex d = su2_dphi(n, lambda);
      const Complex num = (su2_phi(n, lambda + kFdStep) - su2_phi(n, lambda - kFdStep)) / (2.0 * kFdStep);
      fd.push_back({std::abs(d - num), fd_relative(d, num, su2_phi(n, lambda))});
      labels.push_back("n=" + std::to_string(n));
    }
    out.add(check_rel(tag + ": dual vs finite difference", report_from(fd, labels), kFdTol));

    const Complex a = std::sinh(lambda);
    if (std::abs(a) < kSu2SeriesThreshold) {
      out.add(check_flag(tag + ": propagation", true, "skipped: sinh(lambda) = 0 is excluded by the theorem"));
      continue;
    }
    std::vector<SampleResidual> prop;
    labels.clear();
    for (const Complex f1 : {Complex(1.0), Complex(0.7, -0.2)}) {
      const auto g = su2_propagate_sine(lambda, f1, n_max);
      for (std::size_t n = 0; n <= n_max; ++n) {
        const Complex expected = f1 / a * su2_dphi(n, lambda);
        const double r = std::abs(g[n] - expected);
        prop.push_back({r, r / (1.0 + std::abs(expected))});
        labels.push_back("f1=" + lambda_label(f1) + ", n=" + std::to_string(n));
      }
    }
    out.add(check_rel(tag + ": propagation matches f(1)/sinh(lambda) dPhi", report_from(prop, labels),
                      tolerance_for(cfg, 1e-8)));
  }
}

void run_sinsev(const SuiteConfig& cfg, SuiteReport& out) {
  struct Case {
    std::vector<ThreeTermRecurrence> factors;
    std::vector<Complex> lambda;
    std::vector<std::vector<Complex>> coeffs;
  };
  const auto cheb = ThreeTermRecurrence::chebyshev();
  const auto leg = ThreeTermRecurrence::legendre();
  const std::vector<Case> cases{
      {{cheb, cheb}, {0.7, 0.3}, {{1.0, 2.0}, {3.0, -1.0}}},
      {{cheb, leg, cheb}, {0.7, 0.3, {0.5, 0.2}}, {{1.0, 2.0, {0.0, -0.5}}, {-1.0, 0.5, 2.0}}},
  };
  const std::size_t max_coord = 12;
  Sampler rng(cfg.seed);
  for (const auto& cs : cases) {
    const std::size_t d = cs.factors.size();
    const ProductPolyHypergroup hg(cs.factors, 2 * max_coord);
    const std::string tag = "d=" + std::to_string(d) + " lambda=" + vec_label(cs.lambda);
    std::vector<std::pair<MultiIndex, MultiIndex>> pairs;
    pairs.reserve(cfg.samples);
    const auto coord = [&] { return std::min<std::size_t>(max_coord, static_cast<std::size_t>(rng.unit() * 13.0)); };
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      MultiIndex x(d), y(d);
      for (std::size_t j = 0; j < d; ++j) {
        x[j] = coord();
        y[j] = coord();
      }
      pairs.emplace_back(std::move(x), std::move(y));
    }
    const ProductExponential m{&hg, cs.lambda};
    out.add(check_rel(tag + ": exponential", exp_residual(hg, m, std::span(pairs), cfg.exec),
                      tolerance_for(cfg, 1e-10)));
    for (const auto& c : cs.coeffs) {
      const auto f = multi_sine(hg, c, cs.lambda);
      out.add(check_rel(tag + " c=" + vec_label(c) + ": sine", sine_residual(hg, f, m, std::span(pairs), cfg.exec),
                        tolerance_for(cfg, kVerificationTol)));
      const auto fit = fit_coefficients(hg, f, cs.lambda, 6);
      std::vector<SampleResidual> diff;
      std::vector<std::string> labels;
      for (std::size_t j = 0; j < d; ++j) {
        const double r = std::abs(fit.c[j] - c[j]);
        diff.push_back({r, r / (1.0 + std::abs(c[j]))});
        labels.push_back("c_" + std::to_string(j + 1) + "=" + lambda_label(fit.c[j]));
      }
      out.add(check_abs(tag + " c=" + vec_label(c) + ": fit round trip", report_from(diff, labels),
                        tolerance_for(cfg, kVerificationTol)));
      out.add(check_rel(tag + " c=" + vec_label(c) + ": fitted form on degree<=6", fit.verification,
                        tolerance_for(cfg, kVerificationTol)));
    }

    std::vector<SampleResidual> fd;
    std::vector<std::string> labels;
    for (const auto& x : multi_indices_by_degree(d, 6)) {
      const auto grad = hg.q_grad(x, cs.lambda);
      for (std::size_t j = 0; j < d; ++j) {
        auto lp = cs.lambda, lm = cs.lambda;
        lp[j] += kFdStep;
        lm[j] -= kFdStep;
        const Complex num = (hg.q_eval(x, lp) - hg.q_eval(x, lm)) / (2.0 * kFdStep);
        fd.push_back({std::abs(grad[j] - num), fd_relative(grad[j], num, hg.q_eval(x, cs.lambda))});
        labels.push_back(describe(x) + ", j=" + std::to_string(j + 1));
      }
    }
    out.add(check_rel(tag + ": dual vs finite difference", report_from(fd, labels), kFdTol));
  }
}

}  // namespace hypersine::detail

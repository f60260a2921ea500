#include "hypersine/coset.hpp"

#include <cstdio>

namespace hypersine {

AffineElement::AffineElement(double x_, double u_) : x(x_), u(u_) {
  if (x == 0.0 || !std::isfinite(x) || !std::isfinite(u))
    throw ArgumentError("affine element needs finite x != 0 and finite u");
}

AffineElement group_mul(const AffineElement& p, const AffineElement& q) { return {p.x * q.x, p.x * q.u + p.u}; }

AffineElement group_inv(const AffineElement& p) { return {1.0 / p.x, -p.u / p.x}; }

DoubleCoset::DoubleCoset(double x_, double u_) : x(std::abs(x_)), u(std::abs(u_)) {
  if (x == 0.0 || !std::isfinite(x) || !std::isfinite(u))
    throw ArgumentError("double coset needs finite |x| > 0 and finite u");
}

std::array<AffineElement, 4> coset_members(const DoubleCoset& c) {
  return {AffineElement{c.x, c.u}, AffineElement{-c.x, c.u}, AffineElement{c.x, -c.u}, AffineElement{-c.x, -c.u}};
}

std::string describe(const AffineElement& g) { return "(" + describe(g.x) + ", " + describe(g.u) + ")"; }

std::string describe(const DoubleCoset& c) { return "K(" + describe(c.x) + ", " + describe(c.u) + ")K"; }

std::string describe(const QuadSample& s) {
  return "(x=" + describe(s.x) + ", u=" + describe(s.u) + ", y=" + describe(s.y) + ", v=" + describe(s.v) + ")";
}

FiniteMeasure<DoubleCoset> CosetHypergroup::convolve(const DoubleCoset& p, const DoubleCoset& q) const {
  return FiniteMeasure<DoubleCoset>({{DoubleCoset(p.x * q.x, p.x * q.u + p.u), 0.5},
                                     {DoubleCoset(-p.x * q.x, -p.x * q.u + p.u), 0.5}});
}

AffineElement sample_affine(Sampler& rng, double abs_lo, double abs_hi, double u_max) {
  const double mag = rng.uniform(abs_lo, abs_hi);
  const double x = rng.coin() ? -mag : mag;
  return {x, rng.uniform(-u_max, u_max)};
}

std::vector<std::pair<AffineElement, AffineElement>> sample_affine_pairs(std::uint64_t seed, std::size_t count) {
  Sampler rng(seed);
  std::vector<std::pair<AffineElement, AffineElement>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto p = sample_affine(rng);
    auto q = sample_affine(rng);
    out.emplace_back(p, q);
  }
  return out;
}

std::vector<std::pair<DoubleCoset, DoubleCoset>> to_coset_pairs(
    std::span<const std::pair<AffineElement, AffineElement>> pairs) {
  std::vector<std::pair<DoubleCoset, DoubleCoset>> out;
  out.reserve(pairs.size());
  for (const auto& [p, q] : pairs) out.emplace_back(canonical(p), canonical(q));
  return out;
}

ResidualReport falsify_dalembert_alpha(Complex lambda, Complex alpha, std::span<const QuadSample> samples) {
  if (alpha == Complex(0.0)) throw ArgumentError("falsify_dalembert_alpha: alpha must be nonzero");
  if (samples.empty()) throw ArgumentError("falsify_dalembert_alpha: no samples");
  const auto m = [&](double x, double u) { return std::exp(lambda * std::log(std::abs(x))) * std::cosh(alpha * u); };
  const auto sweep = sweep_max_serial(samples.size(), [&](std::size_t i) {
    const auto& s = samples[i];
    const Complex lhs = m(s.x * s.y, s.x * s.v + s.u) + m(s.x * s.y, s.x * s.v - s.u);
    const Complex rhs = 2.0 * m(s.x, s.u) * m(s.y, s.v);
    const double r = std::abs(lhs - rhs);
    return SampleResidual{r, r / (1.0 + std::abs(rhs))};
  });
  return make_report(sweep, samples);
}

bool verify_compat(const std::function<Complex(const AffineElement&)>& f, std::span<const AffineElement> samples,
                   double tol) {
  for (const auto& g : samples) {
    const auto members = coset_members(canonical(g));
    const Complex ref = f(g);
    for (const auto& h : members)
      if (std::abs(f(h) - ref) > tol) return false;
  }
  return true;
}

ResidualReport square_norm_check(Complex a, std::span<const std::pair<double, double>> samples) {
  if (samples.empty()) throw ArgumentError("square_norm_check: no samples");
  const auto g = [a](double u) { return a * u * u; };
  const auto sweep = sweep_max_serial(samples.size(), [&](std::size_t i) {
    const auto [u, v] = samples[i];
    const Complex lhs = g(u + v) + g(u - v);
    const Complex rhs = 2.0 * g(u) + 2.0 * g(v);
    const double r = std::abs(lhs - rhs);
    return SampleResidual{r, r / (1.0 + std::abs(rhs))};
  });
  return make_report(sweep, samples);
}

GroupSineCheck group_sine_check(Complex lambda, std::span<const std::pair<AffineElement, AffineElement>> samples,
                                Execution exec) {
  if (samples.empty()) throw ArgumentError("group_sine_check: no samples");
  const auto add = [](const AffineElement& p) { return std::log(std::abs(p.x)); };
  const auto m = [lambda](const AffineElement& p) { return std::exp(lambda * std::log(std::abs(p.x))); };
  const auto f = [&](const AffineElement& p) { return add(p) * m(p); };
  GroupSineCheck out;
  out.additive = make_report(sweep_max(
                                 samples.size(),
                                 [&](std::size_t i) {
                                   const auto& [p, q] = samples[i];
                                   const double lhs = add(group_mul(p, q));
                                   const double rhs = add(p) + add(q);
                                   const double r = std::abs(lhs - rhs);
                                   return SampleResidual{r, r / (1.0 + std::abs(add(p)) + std::abs(add(q)))};
                                 },
                                 exec),
                             samples);
  out.sine = make_report(sweep_max(
                             samples.size(),
                             [&](std::size_t i) {
                               const auto& [p, q] = samples[i];
                               const Complex t1 = f(p) * m(q), t2 = f(q) * m(p);
                               const double r = std::abs(f(group_mul(p, q)) - t1 - t2);
                               return SampleResidual{r, r / (1.0 + std::abs(t1) + std::abs(t2))};
                             },
                             exec),
                         samples);
  return out;
}

}  // namespace hypersine

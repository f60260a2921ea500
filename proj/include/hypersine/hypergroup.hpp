#pragma once

#include <complex>
#include <concepts>
#include <cstddef>
#include <cstdio>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypersine/error.hpp"
#include "hypersine/measure.hpp"
#include "hypersine/parallel.hpp"

namespace hypersine {

using Complex = std::complex<double>;

/**
 * A hypergroup realized through its action on point masses.
 *
 * convolve(x, y) returns δ_x * δ_y as a finitely supported probability
 * measure; identity() is the neutral element o.
 */
template <typename H>
concept Hypergroup = requires(const H& h, const typename H::element_type& x) {
  typename H::element_type;
  { h.identity() } -> std::convertible_to<typename H::element_type>;
  { h.convolve(x, x) } -> std::same_as<FiniteMeasure<typename H::element_type>>;
  { h.commutative() } -> std::convertible_to<bool>;
};

template <typename H>
concept HypergroupWithInvolution = Hypergroup<H> && requires(const H& h, const typename H::element_type& x) {
  { h.involution(x) } -> std::convertible_to<typename H::element_type>;
};

template <Hypergroup H>
using element_t = typename H::element_type;

// Human-readable element labels for witnesses and error messages.
inline std::string describe(std::size_t n) { return std::to_string(n); }
inline std::string describe(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}
inline std::string describe(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}
template <typename A, typename B>
std::string describe(const std::pair<A, B>& p) {
  return "(" + describe(p.first) + ", " + describe(p.second) + ")";
}

/// Maximum residual of a functional equation over a sample set.
struct ResidualReport {
  double max_abs = 0.0;
  double max_rel = 0.0;
  std::string witness;
  std::size_t witness_index = 0;
  std::size_t samples = 0;

  bool within_abs(double tol) const { return max_abs <= tol; }
  bool within_rel(double tol) const { return max_rel <= tol; }
};

template <typename Sample>
ResidualReport make_report(const SweepResult& sweep, std::span<const Sample> samples) {
  ResidualReport r;
  r.max_abs = sweep.max_abs;
  r.max_rel = sweep.max_rel;
  r.samples = sweep.samples;
  r.witness_index = sweep.witness;
  if (sweep.samples > 0) r.witness = describe(samples[sweep.witness]);
  return r;
}

/// Σ_i w_i f(x_i). Failures of f are reported with the offending element.
template <typename E, typename F>
Complex integrate(F&& f, const FiniteMeasure<E>& mu) {
  Complex sum{0.0, 0.0};
  for (const auto& atom : mu.support()) {
    Complex value;
    try {
      value = Complex(f(atom.element));
    } catch (const std::exception& e) {
      throw EvaluationError("function undefined at element " + describe(atom.element) + ": " + e.what());
    }
    sum += atom.weight * value;
  }
  return sum;
}

/// Bilinear extension of point-mass convolution to finite measures.
template <Hypergroup H>
FiniteMeasure<element_t<H>> convolve_measures(const H& hg, const FiniteMeasure<element_t<H>>& mu,
                                              const FiniteMeasure<element_t<H>>& nu) {
  std::vector<Atom<element_t<H>>> atoms;
  for (const auto& a : mu.support())
    for (const auto& b : nu.support()) {
      const auto prod = hg.convolve(a.element, b.element);
      for (const auto& c : prod.support()) atoms.push_back({c.element, a.weight * b.weight * c.weight});
    }
  return FiniteMeasure<element_t<H>>(std::move(atoms));
}

inline constexpr std::size_t kDefaultSupportCap = 1u << 20;

/// y^n in the convolution sense: y^1 = δ_y, y^{k+1} = y^k * δ_y.
template <Hypergroup H>
FiniteMeasure<element_t<H>> convolve_power(const H& hg, const element_t<H>& y, std::size_t n,
                                           std::size_t support_cap = kDefaultSupportCap) {
  if (n == 0) throw ArgumentError("convolve_power: exponent must be positive");
  using M = FiniteMeasure<element_t<H>>;
  const M dy = M::point(y);
  M acc = dy;
  for (std::size_t k = 1; k < n; ++k) {
    acc = convolve_measures(hg, acc, dy);
    if (acc.size() > support_cap)
      throw ResourceError("convolve_power: support grew to " + std::to_string(acc.size()) + " elements (cap " +
                          std::to_string(support_cap) + ")");
  }
  return acc;
}

/**
 * Residual of the m-sine equation f(x*y) = f(x)m(y) + f(y)m(x) over pairs.
 * Relative residuals are scaled by 1 + |f(x)m(y)| + |f(y)m(x)|.
 */
template <Hypergroup H, typename F, typename M>
ResidualReport sine_residual(const H& hg, F&& f, M&& m, std::span<const std::pair<element_t<H>, element_t<H>>> pairs,
                             Execution exec = Execution::parallel) {
  if (pairs.empty()) throw ArgumentError("sine_residual: empty pair list");
  const auto sweep = sweep_max(
      pairs.size(),
      [&](std::size_t i) {
        const auto& [x, y] = pairs[i];
        const Complex lhs = integrate(f, hg.convolve(x, y));
        const Complex t1 = Complex(f(x)) * Complex(m(y));
        const Complex t2 = Complex(f(y)) * Complex(m(x));
        const double a = std::abs(lhs - t1 - t2);
        return SampleResidual{a, a / (1.0 + std::abs(t1) + std::abs(t2))};
      },
      exec);
  return make_report(sweep, pairs);
}

/// Residual of m(x*y) = m(x)m(y); relative scale 1 + |m(x)m(y)|.
template <Hypergroup H, typename M>
ResidualReport exp_residual(const H& hg, M&& m, std::span<const std::pair<element_t<H>, element_t<H>>> pairs,
                            Execution exec = Execution::parallel) {
  if (pairs.empty()) throw ArgumentError("exp_residual: empty pair list");
  const auto sweep = sweep_max(
      pairs.size(),
      [&](std::size_t i) {
        const auto& [x, y] = pairs[i];
        const Complex lhs = integrate(m, hg.convolve(x, y));
        const Complex rhs = Complex(m(x)) * Complex(m(y));
        const double a = std::abs(lhs - rhs);
        return SampleResidual{a, a / (1.0 + std::abs(rhs))};
      },
      exec);
  return make_report(sweep, pairs);
}

/**
 * Residual of f(x*y^n) = f(x)m(y)^n + n f(y)m(x)m(y)^{n-1} for n = 1..n_max.
 * The witness is labelled by the exponent n.
 */
template <Hypergroup H, typename F, typename M>
ResidualReport power_identity_check(const H& hg, F&& f, M&& m, const element_t<H>& x, const element_t<H>& y,
                                    std::size_t n_max, std::size_t support_cap = kDefaultSupportCap,
                                    Execution exec = Execution::parallel) {
  if (n_max == 0) throw ArgumentError("power_identity_check: n_max must be at least 1");
  using Meas = FiniteMeasure<element_t<H>>;
  // Powers are built sequentially; only the residual evaluation is swept.
  std::vector<Meas> shifted;
  shifted.reserve(n_max);
  Meas power = Meas::point(y);
  const Meas dx = Meas::point(x);
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n > 1) {
      power = convolve_measures(hg, power, Meas::point(y));
      if (power.size() > support_cap)
        throw ResourceError("power_identity_check: support grew to " + std::to_string(power.size()) + " elements");
    }
    shifted.push_back(convolve_measures(hg, dx, power));
  }
  const Complex fx = f(x), fy = f(y), mx = m(x), my = m(y);
  const auto sweep = sweep_max(
      n_max,
      [&](std::size_t i) {
        const double n = static_cast<double>(i + 1);
        const Complex lhs = integrate(f, shifted[i]);
        const Complex t1 = fx * std::pow(my, n);
        const Complex t2 = n * fy * mx * (i == 0 ? Complex(1.0) : std::pow(my, n - 1.0));
        const double a = std::abs(lhs - t1 - t2);
        return SampleResidual{a, a / (1.0 + std::abs(t1) + std::abs(t2))};
      },
      exec);
  std::vector<std::string> labels;
  labels.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n)
    labels.push_back("x=" + describe(x) + ", y=" + describe(y) + ", n=" + std::to_string(n));
  ResidualReport r;
  r.max_abs = sweep.max_abs;
  r.max_rel = sweep.max_rel;
  r.samples = sweep.samples;
  r.witness_index = sweep.witness;
  r.witness = labels[sweep.witness];
  return r;
}

/// Every pair (x, y) with x, y drawn from the given element list.
template <typename E>
std::vector<std::pair<E, E>> all_pairs(std::span<const E> elements) {
  std::vector<std::pair<E, E>> out;
  out.reserve(elements.size() * elements.size());
  for (const auto& x : elements)
    for (const auto& y : elements) out.emplace_back(x, y);
  return out;
}

/// Pairs (n, k) with 0 <= n, k <= n_max.
inline std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n_max) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve((n_max + 1) * (n_max + 1));
  for (std::size_t n = 0; n <= n_max; ++n)
    for (std::size_t k = 0; k <= n_max; ++k) out.emplace_back(n, k);
  return out;
}

}  // namespace hypersine

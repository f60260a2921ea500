#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "hypersine/dual.hpp"
#include "hypersine/hypergroup.hpp"

namespace hypersine {

/// δ_k * δ_n = Σ' (l+1)/((k+1)(n+1)) δ_l over l = |k-n|, |k-n|+2, ..., k+n.
FiniteMeasure<std::size_t> su2_convolve(std::size_t k, std::size_t n);

class Su2Hypergroup {
 public:
  using element_type = std::size_t;

  std::size_t identity() const { return 0; }
  bool commutative() const { return true; }
  std::size_t involution(std::size_t n) const { return n; }
  FiniteMeasure<std::size_t> convolve(std::size_t k, std::size_t n) const { return su2_convolve(k, n); }
};

/// |sinh λ| below which Φ switches to the even series.
inline constexpr double kSu2SeriesThreshold = 1e-6;

/**
 * Φ(n, λ) = sinh((n+1)λ) / ((n+1) sinh λ), with the removable singularities
 * at λ ∈ iπℤ filled in. Near λ = iπk we write λ = iπk + μ, use
 * Φ(n, λ) = (-1)^{nk} Φ(n, μ) and evaluate Φ(n, μ) by the truncated even
 * series through μ⁶. T is Complex or a dual scalar.
 */
template <typename T>
T su2_phi_t(std::size_t n, const T& lambda) {
  using std::abs;
  using std::sinh;
  const double big_n = static_cast<double>(n) + 1.0;
  const Complex lv = value_of(lambda);
  if (abs(std::sinh(lv)) >= kSu2SeriesThreshold) return sinh(lambda * big_n) / (sinh(lambda) * big_n);

  const double k = std::round(lv.imag() / std::numbers::pi);
  const T mu = lambda - Complex(0.0, k * std::numbers::pi);
  const T mu2 = mu * mu;
  // sinh(Nμ)/(Nμ) and sinh(μ)/μ as even series through μ⁶.
  const double n2 = big_n * big_n;
  const T num = 1.0 + mu2 * (n2 / 6.0) + mu2 * mu2 * (n2 * n2 / 120.0) + mu2 * mu2 * mu2 * (n2 * n2 * n2 / 5040.0);
  const T den = 1.0 + mu2 * (1.0 / 6.0) + mu2 * mu2 * (1.0 / 120.0) + mu2 * mu2 * mu2 * (1.0 / 5040.0);
  const bool odd = (static_cast<long long>(std::abs(k)) * static_cast<long long>(n)) % 2 != 0;
  return odd ? -(num / den) : num / den;
}

inline Complex su2_phi(std::size_t n, Complex lambda) { return su2_phi_t(n, lambda); }

/// ∂_λΦ(n, λ) by dual numbers through the same guarded evaluation.
inline Complex su2_dphi(std::size_t n, Complex lambda) { return su2_phi_t(n, variable(lambda)).deriv; }

/// m_λ(n) = Φ(n, λ).
struct Su2Exponential {
  Complex lambda;
  Complex operator()(std::size_t n) const { return su2_phi(n, lambda); }
};

/// n ↦ c·∂_λΦ(n, λ).
struct Su2Sine {
  Complex c;
  Complex lambda;
  Complex operator()(std::size_t n) const { return c * su2_dphi(n, lambda); }
};

/// n ↦ c·n(n+2), the additive (1-sine) functions.
struct Su2Additive {
  Complex c;
  Complex operator()(std::size_t n) const {
    const double x = static_cast<double>(n);
    return c * (x * (x + 2.0));
  }
};

inline Su2Additive su2_additive(Complex c) { return {c}; }

/**
 * Residual of (n+3) f(n+2) - 2(n+2) m(1) f(n+1) + (n+1) f(n) = 2 f(1)(n+2) m(n+1)
 * for n = 0..n_max, together with its g(n) = (n+1) f(n) form
 * g(n+2) - 2 m(1) g(n+1) + g(n) = 2 f(1)(n+2) m(n+1). The report carries the
 * worse of the two. m(1) = cosh λ for m = m_λ.
 */
template <typename F, typename M>
ResidualReport su2_recurrence_check(F&& f, M&& m, std::size_t n_max) {
  std::vector<Complex> fv(n_max + 3), mv(n_max + 3);
  for (std::size_t n = 0; n < fv.size(); ++n) {
    fv[n] = f(n);
    mv[n] = m(n);
  }
  const auto sweep = sweep_max_serial(n_max + 1, [&](std::size_t n) {
    const double x = static_cast<double>(n);
    const Complex rhs = 2.0 * fv[1] * (x + 2.0) * mv[n + 1];
    const Complex a = (x + 3.0) * fv[n + 2], b = 2.0 * (x + 2.0) * mv[1] * fv[n + 1], c = (x + 1.0) * fv[n];
    const double r1 = std::abs(a - b + c - rhs);
    const double s1 = 1.0 + std::abs(a) + std::abs(b) + std::abs(c) + std::abs(rhs);
    const Complex g0 = (x + 1.0) * fv[n], g1 = (x + 2.0) * fv[n + 1], g2 = (x + 3.0) * fv[n + 2];
    const Complex lhs2 = g2 - 2.0 * mv[1] * g1 + g0;
    const double r2 = std::abs(lhs2 - rhs);
    const double s2 = 1.0 + std::abs(g2) + std::abs(2.0 * mv[1] * g1) + std::abs(g0) + std::abs(rhs);
    return SampleResidual{std::max(r1, r2), std::max(r1 / s1, r2 / s2)};
  });
  ResidualReport r;
  r.max_abs = sweep.max_abs;
  r.max_rel = sweep.max_rel;
  r.samples = sweep.samples;
  r.witness_index = sweep.witness;
  r.witness = "n=" + std::to_string(sweep.witness);
  return r;
}

/**
 * f(0) = 0, f(1) = f1, continued by solving the inhomogeneous recurrence for
 * f(n+2) with m = m_λ. Returns f(0..n_max).
 */
std::vector<Complex> su2_propagate_sine(Complex lambda, Complex f1, std::size_t n_max);

/// ψ(n+2) = 2 cosh λ ψ(n+1) - ψ(n) from the given ψ(0), ψ(1); returns ψ(0..n_max).
std::vector<Complex> su2_propagate_homogeneous(Complex lambda, Complex psi0, Complex psi1, std::size_t n_max);

}  // namespace hypersine

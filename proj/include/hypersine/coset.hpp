#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hypersine/hypergroup.hpp"
#include "hypersine/sampling.hpp"

namespace hypersine {

/// (x, u) ↔ the matrix [[x, u], [0, 1]], x != 0.
struct AffineElement {
  double x = 1.0;
  double u = 0.0;

  AffineElement() = default;
  AffineElement(double x_, double u_);

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

/// (x, u)·(y, v) = (xy, xv + u).
AffineElement group_mul(const AffineElement& p, const AffineElement& q);
/// (x, u)^{-1} = (1/x, -u/x).
AffineElement group_inv(const AffineElement& p);

/// Double coset K(x, u)K for K = {(1, 0), (-1, 0)}, stored as (|x|, |u|).
struct DoubleCoset {
  double x = 1.0;  // |x| > 0
  double u = 0.0;  // |u|

  DoubleCoset() = default;
  DoubleCoset(double x_, double u_);
  explicit DoubleCoset(const AffineElement& g) : DoubleCoset(g.x, g.u) {}

  friend auto operator<=>(const DoubleCoset&, const DoubleCoset&) = default;
};

inline DoubleCoset canonical(const AffineElement& g) { return DoubleCoset(g); }

/// The four group elements of a coset: (x, u), (-x, u), (x, -u), (-x, -u).
std::array<AffineElement, 4> coset_members(const DoubleCoset& c);

std::string describe(const AffineElement& g);
std::string describe(const DoubleCoset& c);

/// G//K with δ_p * δ_q = ½ δ_{K(xy, xv+u)K} + ½ δ_{K(-xy, -xv+u)K}.
class CosetHypergroup {
 public:
  using element_type = DoubleCoset;

  DoubleCoset identity() const { return {1.0, 0.0}; }
  bool commutative() const { return false; }
  /// K p K ↦ K p^{-1} K.
  DoubleCoset involution(const DoubleCoset& p) const { return canonical(group_inv({p.x, p.u})); }
  FiniteMeasure<DoubleCoset> convolve(const DoubleCoset& p, const DoubleCoset& q) const;
};

/// ½ f(xy, xv+u) + ½ f(-xy, -xv+u), arguments reduced to canonical form.
template <typename F>
Complex coset_apply(F&& f, const AffineElement& p, const AffineElement& q) {
  const DoubleCoset a(p.x * q.x, p.x * q.u + p.u);
  const DoubleCoset b(-p.x * q.x, -p.x * q.u + p.u);
  return 0.5 * Complex(f(a)) + 0.5 * Complex(f(b));
}

/// m_λ(x, u) = |x|^λ = exp(λ ln|x|).
struct CosetExponential {
  Complex lambda;
  Complex operator()(const DoubleCoset& c) const { return std::exp(lambda * std::log(c.x)); }
};

/// f(x, u) = c |x|^λ ln|x|.
struct CosetSine {
  Complex c;
  Complex lambda;
  Complex operator()(const DoubleCoset& d) const {
    const double l = std::log(d.x);
    return c * std::exp(lambda * l) * l;
  }
};

inline CosetExponential coset_exponential(Complex lambda) { return {lambda}; }
inline CosetSine coset_sine(Complex c, Complex lambda) { return {c, lambda}; }

/// |x| in [abs_lo, abs_hi] with a random sign, u in [-u_max, u_max].
AffineElement sample_affine(Sampler& rng, double abs_lo = 0.1, double abs_hi = 10.0, double u_max = 10.0);

/// Random pairs of affine elements (for convolution checks).
std::vector<std::pair<AffineElement, AffineElement>> sample_affine_pairs(std::uint64_t seed, std::size_t count);
/// The same pairs reduced to cosets.
std::vector<std::pair<DoubleCoset, DoubleCoset>> to_coset_pairs(
    std::span<const std::pair<AffineElement, AffineElement>> pairs);

/// A sample (x, u, y, v) for the group-level equations.
struct QuadSample {
  double x, u, y, v;
};
std::string describe(const QuadSample& s);

/**
 * Residual of m(xy, xv+u) + m(xy, xv-u) - 2 m(x,u) m(y,v) for the candidate
 * m(x, u) = |x|^λ cosh(αu). Any α != 0 leaves a nonzero residual.
 * Throws ArgumentError for α = 0.
 */
ResidualReport falsify_dalembert_alpha(Complex lambda, Complex alpha, std::span<const QuadSample> samples);

/// True iff f takes the same value on all four members of each sampled coset.
bool verify_compat(const std::function<Complex(const AffineElement&)>& f, std::span<const AffineElement> samples,
                   double tol = 0.0);

/// Residual of g(u+v) + g(u-v) - 2g(u) - 2g(v) for g(u) = a·u² over (u, v) samples.
ResidualReport square_norm_check(Complex a, std::span<const std::pair<double, double>> samples);

/// f(y, u) = c|y|^λ ln|y| + a u² |y|^λ; a sine function only when a = 0.
struct QuadraticCandidate {
  Complex c;
  Complex a;
  Complex lambda;
  Complex operator()(const DoubleCoset& d) const {
    const double l = std::log(d.x);
    return std::exp(lambda * l) * (c * l + a * d.u * d.u);
  }
};

struct GroupSineCheck {
  ResidualReport additive;  // a(pq) = a(p) + a(q), a = ln|x|
  ResidualReport sine;      // f(pq) = f(p)m(q) + f(q)m(p), f = a·m
};

/// The group-level sine equation on G for f = ln|x|·|x|^λ.
GroupSineCheck group_sine_check(Complex lambda, std::span<const std::pair<AffineElement, AffineElement>> samples,
                                Execution exec = Execution::parallel);

}  // namespace hypersine

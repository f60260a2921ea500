#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypersine/hypergroup.hpp"

namespace hypersine {

/**
 * Sturm–Liouville function A on (0, ∞), described by its logarithmic
 * derivative A'/A. singular_index is ν with A'/A ~ ν/x at the origin
 * (ν = 0 for A regular and positive at 0); it drives the series launch.
 */
struct SturmLiouvilleFunction {
  std::string name;
  std::function<double(double)> value;           // A(x)
  std::function<double(double)> log_derivative;  // A'(x)/A(x)
  double singular_index = 0.0;

  /// A(x) = x^{2α+1}, α >= -1/2.
  static SturmLiouvilleFunction power(double alpha);
  /// A ≡ 1.
  static SturmLiouvilleFunction constant();
};

inline constexpr double kSturmDefaultXmax = 5.0;
inline constexpr double kSturmDefaultStep = 1e-3;
inline constexpr double kSturmOverflow = 1e12;

/**
 * Grid solution of u'' + (A'/A) u' = λ u + c·Φ(·, λ).
 *
 * Nodes up to start_index come from the series launch; the rest from RK4.
 * residual[i] is the finite-difference substitution residual at interior
 * RK4 nodes (0 elsewhere), residual_bound its maximum.
 */
struct OdeSolution {
  std::vector<double> grid;
  std::vector<Complex> values;
  std::vector<Complex> derivs;
  std::vector<Complex> forcing;  // Φ(x_i, λ) when c != 0, else empty
  std::vector<double> residual;
  Complex lambda;
  Complex c;
  double h = 0.0;
  std::size_t start_index = 0;
  double residual_bound = 0.0;

  std::size_t size() const { return grid.size(); }
};

/// Φ(·, λ): Φ(0) = 1, Φ'(0) = 0.
OdeSolution solve_phi(const SturmLiouvilleFunction& a, Complex lambda, double x_max = kSturmDefaultXmax,
                      double h = kSturmDefaultStep);

/// f'' + (A'/A) f' = λ f + c Φ with f(0) = f'(0) = 0, integrated jointly with Φ.
OdeSolution solve_sine(const SturmLiouvilleFunction& a, Complex lambda, Complex c, double x_max = kSturmDefaultXmax,
                       double h = kSturmDefaultStep);

/// ∂_λΦ(·, λ) by dual-number integration of the Φ equation.
OdeSolution dlambda_phi(const SturmLiouvilleFunction& a, Complex lambda, double x_max = kSturmDefaultXmax,
                        double h = kSturmDefaultStep);

/// u'' + (A'/A) u' = λ u from u(x_start) = u0, u'(x_start) = du0 (no series launch; for uniqueness checks).
OdeSolution solve_homogeneous(const SturmLiouvilleFunction& a, Complex lambda, Complex u0, Complex du0,
                              double x_max = kSturmDefaultXmax, double h = kSturmDefaultStep);

/// max_i |u_i - v_i| over a common grid.
double max_grid_difference(const OdeSolution& u, const OdeSolution& v);

/// sinh(z)/z, entire; series near 0.
Complex sinhc(Complex z);

/// cosh(√λ x); even in √λ so the branch does not matter.
Complex cosh_sqrt(Complex lambda, double x);
/// ∂_λ cosh(√λ x) = x² sinh(√λ x)/(2√λ x); equals x²/2 at λ = 0.
Complex dlambda_cosh_sqrt(Complex lambda, double x);

/// A ≡ 1 on [0, ∞): δ_x * δ_y = ½ δ_{x+y} + ½ δ_{|x-y|}.
class CoshHypergroup {
 public:
  using element_type = double;

  double identity() const { return 0.0; }
  bool commutative() const { return true; }
  double involution(double x) const { return x; }
  FiniteMeasure<double> convolve(double x, double y) const;
};

struct CoshHypergroupCheck {
  ResidualReport exponential;  // m = cosh(√λ ·)
  ResidualReport sine;         // f = ∂_λ cosh(√λ ·) against m
};

/// Sine and exponential equations for A ≡ 1 over the given (x, y) samples.
CoshHypergroupCheck cosh_hypergroup_check(Complex lambda, std::span<const std::pair<double, double>> samples,
                                          Execution exec = Execution::parallel);

}  // namespace hypersine

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hypersine/hypergroup.hpp"
#include "hypersine/poly.hpp"

namespace hypersine {

using MultiIndex = std::vector<std::size_t>;

/**
 * Product of d one-variable polynomial hypergroups. Elements are d-tuples,
 * Q_x(λ) = Π_j P^{(j)}_{x_j}(λ_j), and δ_x * δ_y is the product of the
 * per-factor linearizations.
 */
class ProductPolyHypergroup {
 public:
  using element_type = MultiIndex;

  explicit ProductPolyHypergroup(std::vector<ThreeTermRecurrence> factors, std::size_t table_n_max = 24);

  std::size_t dimension() const { return factors_.size(); }
  MultiIndex identity() const { return MultiIndex(factors_.size(), 0); }
  bool commutative() const { return true; }
  MultiIndex involution(const MultiIndex& x) const { return x; }

  FiniteMeasure<MultiIndex> convolve(const MultiIndex& x, const MultiIndex& y) const;

  const PolynomialHypergroup& factor(std::size_t j) const { return factors_[j]; }

  /// Q_x(λ).
  Complex q_eval(const MultiIndex& x, std::span<const Complex> lambda) const;
  /// (∂_1 Q_x(λ), ..., ∂_d Q_x(λ)) with one dual pass per coordinate.
  std::vector<Complex> q_grad(const MultiIndex& x, std::span<const Complex> lambda) const;

 private:
  void check_dims(std::size_t got, const char* what) const;

  std::vector<PolynomialHypergroup> factors_;
};

/// x ↦ Q_x(λ).
struct ProductExponential {
  const ProductPolyHypergroup* hg;
  std::vector<Complex> lambda;
  Complex operator()(const MultiIndex& x) const { return hg->q_eval(x, lambda); }
};

/// x ↦ Σ_j c_j ∂_j Q_x(λ).
struct MultiSine {
  const ProductPolyHypergroup* hg;
  std::vector<Complex> c;
  std::vector<Complex> lambda;
  Complex operator()(const MultiIndex& x) const;
};

MultiSine multi_sine(const ProductPolyHypergroup& hg, std::vector<Complex> c, std::vector<Complex> lambda);

struct CoefficientFit {
  std::vector<Complex> c;
  ResidualReport verification;  // f(x) vs Σ c_j ∂_j Q_x(λ) on total degree <= n_max
};

/// Function type accepted by fit_coefficients.
using MultiFunction = std::function<Complex(const MultiIndex&)>;

/**
 * Solves f(e_j) = Σ_i c_i ∂_i Q_{e_j}(λ) on the unit elements, then checks the
 * representation on every element of total degree at most n_max. Throws
 * DegenerateError when the system matrix is numerically singular.
 */
CoefficientFit fit_coefficients(const ProductPolyHypergroup& hg, const MultiFunction& f,
                                std::span<const Complex> lambda, std::size_t n_max = 6);

/// All d-tuples with entries in [0, max_coord].
std::vector<MultiIndex> multi_indices_box(std::size_t d, std::size_t max_coord);
/// All d-tuples with entry sum at most max_degree.
std::vector<MultiIndex> multi_indices_by_degree(std::size_t d, std::size_t max_degree);

}  // namespace hypersine

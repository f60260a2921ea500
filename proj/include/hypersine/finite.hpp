#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hypersine/hypergroup.hpp"
#include "hypersine/measure.hpp"

namespace hypersine {

/**
 * Finite hypergroup on {0, ..., N-1} given by its structure tensor:
 * δ_i * δ_j = Σ_l c[i][j][l] δ_l, with 0 as the identity.
 */
struct FiniteHypergroupSpec {
  std::string name;
  std::size_t size = 0;
  std::vector<double> tensor;  // row-major [i][j][l]

  double coeff(std::size_t i, std::size_t j, std::size_t l) const { return tensor[(i * size + j) * size + l]; }
  double& coeff(std::size_t i, std::size_t j, std::size_t l) { return tensor[(i * size + j) * size + l]; }

  /// Checks row sums, nonnegativity and the identity rows; throws ArgumentError.
  void validate(double tol = kConstructionTol) const;
  bool is_commutative(double tol = kConstructionTol) const;
};

/// The two-point hypergroup D(θ): δ_1 * δ_1 = θ δ_0 + (1-θ) δ_1.
FiniteHypergroupSpec dtheta_spec(double theta);

FiniteHypergroupSpec parse_finite_spec(const std::string& json_text);
FiniteHypergroupSpec load_finite_spec(const std::string& path);
std::string to_json(const FiniteHypergroupSpec& spec);

/// Exponentials listed in a spec file under the optional "exponentials" key.
std::vector<std::vector<Complex>> parse_listed_exponentials(const std::string& json_text);

class FiniteHypergroup {
 public:
  using element_type = std::size_t;

  explicit FiniteHypergroup(FiniteHypergroupSpec spec, double tol = kConstructionTol);

  std::size_t identity() const { return 0; }
  bool commutative() const { return commutative_; }
  std::size_t size() const { return spec_.size; }
  const FiniteHypergroupSpec& spec() const { return spec_; }

  FiniteMeasure<std::size_t> convolve(std::size_t i, std::size_t j) const;

  std::vector<std::size_t> elements() const;

 private:
  FiniteHypergroupSpec spec_;
  bool commutative_ = false;
};

/// Function on {0..N-1} backed by a value table; indices outside throw.
class TabulatedFunction {
 public:
  TabulatedFunction() = default;
  explicit TabulatedFunction(std::vector<Complex> values) : values_(std::move(values)) {}

  Complex operator()(std::size_t i) const;
  const std::vector<Complex>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<Complex> values_;
};

struct SineSpaceOptions {
  double exp_tol = kVerificationTol;   // m must be an exponential to this tolerance
  double sine_tol = kVerificationTol;  // each returned basis vector is re-checked at this tolerance
  double cutoff_factor = 0.0;          // 0 selects max(N², N)·eps
};

struct SineSpace {
  std::vector<std::vector<Complex>> basis;
  std::vector<double> singular_values;  // descending
  double cutoff = 0.0;

  std::size_t dimension() const { return basis.size(); }
};

/**
 * Basis of all m-sine functions on a finite hypergroup.
 *
 * Solves the N² equations Σ_l c[i][j][l] f(l) - m(j) f(i) - m(i) f(j) = 0
 * by SVD; right singular vectors whose singular value is at most
 * max(N², N)·eps·σ_max span the solution space.
 */
SineSpace sine_space(const FiniteHypergroupSpec& spec, std::span<const Complex> m, const SineSpaceOptions& opts = {});

/// True iff |f(y) m(y)| <= tol for every basis function f and every y.
bool compact_vanishing_check(const FiniteHypergroupSpec& spec, std::span<const Complex> m,
                             const std::vector<std::vector<Complex>>& sine_basis, double tol = kVerificationTol);

/**
 * All exponentials of a commutative finite hypergroup.
 *
 * Exponentials are the joint eigenvectors of the translation matrices
 * L_i[j][l] = c[i][j][l] normalized to m(0) = 1; they are read off from the
 * eigenvectors of a generic combination Σ r_i L_i and kept only if they pass
 * exp_residual at tol.
 */
std::vector<std::vector<Complex>> find_exponentials(const FiniteHypergroupSpec& spec, double tol = kVerificationTol);

/// exp_residual over all N² pairs.
ResidualReport finite_exp_residual(const FiniteHypergroupSpec& spec, std::span<const Complex> m,
                                   Execution exec = Execution::parallel);

}  // namespace hypersine

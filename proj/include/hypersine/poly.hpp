#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hypersine/dual.hpp"
#include "hypersine/error.hpp"
#include "hypersine/hypergroup.hpp"
#include "hypersine/measure.hpp"

namespace hypersine {

struct RecurrenceCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/**
 * x·P_n = a_n P_{n+1} + b_n P_n + c_n P_{n-1} with P_0 = 1 and
 * P_1 = (x - b_0)/a_0. Normalized so that P_n(1) = 1.
 */
class ThreeTermRecurrence {
 public:
  using Generator = std::function<RecurrenceCoeffs(std::size_t)>;

  ThreeTermRecurrence(std::string name, Generator gen, std::optional<std::size_t> last_index = std::nullopt);

  /// T_n: a_0 = 1, b_0 = 0; a_n = c_n = 1/2, b_n = 0.
  static ThreeTermRecurrence chebyshev();
  /// Legendre P_n with P_n(1) = 1: a_n = (n+1)/(2n+1), c_n = n/(2n+1).
  static ThreeTermRecurrence legendre();
  /// Finite tables; c[0] is ignored. Validates the normalization.
  static ThreeTermRecurrence from_table(std::string name, std::vector<double> a, std::vector<double> b,
                                        std::vector<double> c);

  RecurrenceCoeffs at(std::size_t n) const;
  /// Largest n with known coefficients, or nullopt for unbounded recurrences.
  std::optional<std::size_t> last_index() const { return last_; }
  const std::string& name() const { return name_; }

  /// Checks a_n + b_n + c_n = 1, a_n > 0, c_n > 0 for 1 <= n <= up_to and a_0 + b_0 = 1.
  void validate(std::size_t up_to, double tol = 1e-12) const;

 private:
  std::string name_;
  Generator gen_;
  std::optional<std::size_t> last_;
};

ThreeTermRecurrence parse_recurrence(const std::string& json_text);
ThreeTermRecurrence load_recurrence(const std::string& path);
/// Built-in recurrences by name ("chebyshev", "legendre").
ThreeTermRecurrence builtin_recurrence(const std::string& name);

/// P_0(λ), ..., P_n(λ) by forward recurrence. T may be Complex or a dual scalar.
template <typename T>
std::vector<T> eval_P_all(const ThreeTermRecurrence& rec, std::size_t n, const T& lambda) {
  std::vector<T> p;
  p.reserve(n + 1);
  p.push_back(T(1.0));
  if (n == 0) return p;
  const auto c0 = rec.at(0);
  p.push_back((lambda - c0.b) / c0.a);
  for (std::size_t k = 1; k < n; ++k) {
    const auto ck = rec.at(k);
    p.push_back(((lambda - ck.b) * p[k] - p[k - 1] * ck.c) / ck.a);
  }
  return p;
}

template <typename T>
T eval_P(const ThreeTermRecurrence& rec, std::size_t n, const T& lambda) {
  if (n == 0) return T(1.0);
  const auto c0 = rec.at(0);
  T prev = T(1.0);
  T cur = (lambda - c0.b) / c0.a;
  for (std::size_t k = 1; k < n; ++k) {
    const auto ck = rec.at(k);
    T next = ((lambda - ck.b) * cur - prev * ck.c) / ck.a;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// P_n'(λ) through the dual-number recurrence.
Complex eval_dP(const ThreeTermRecurrence& rec, std::size_t n, Complex lambda);

inline constexpr double kLinearizationNegTol = 1e-10;

/**
 * Coefficients of P_n·P_k in the P-basis.
 *
 * Computed by reducing x·P_m with the recurrence: Q_0 = e_n and
 * Q_{j+1} = ((x - b_j) Q_j - c_j Q_{j-1}) / a_j gives Q_k = P_n·P_k.
 * Throws NotHypergroupError when a coefficient is below -1e-10.
 */
FiniteMeasure<std::size_t> linearize(const ThreeTermRecurrence& rec, std::size_t n, std::size_t k);

/// Memoized linearizations for 0 <= n, k <= n_max. Immutable once built.
class LinearizationTable {
 public:
  LinearizationTable(const ThreeTermRecurrence& rec, std::size_t n_max);

  std::size_t n_max() const { return n_max_; }
  const FiniteMeasure<std::size_t>& at(std::size_t n, std::size_t k) const;

  /// max |Σ_l c(n,k,l) - 1| and min c(n,k,l) over the table.
  double max_mass_error() const;
  double min_coefficient() const;

 private:
  std::size_t n_max_;
  std::vector<FiniteMeasure<std::size_t>> rows_;  // [n * (n_max+1) + k]
};

/// The polynomial hypergroup on ℕ generated by a recurrence.
class PolynomialHypergroup {
 public:
  using element_type = std::size_t;

  /// Linearizations up to table_n_max are precomputed (and checked for nonnegativity).
  PolynomialHypergroup(ThreeTermRecurrence rec, std::size_t table_n_max = 64);

  std::size_t identity() const { return 0; }
  bool commutative() const { return true; }
  std::size_t involution(std::size_t n) const { return n; }

  FiniteMeasure<std::size_t> convolve(std::size_t n, std::size_t k) const;

  const ThreeTermRecurrence& recurrence() const { return rec_; }
  const LinearizationTable& table() const { return *table_; }

 private:
  ThreeTermRecurrence rec_;
  std::shared_ptr<const LinearizationTable> table_;
};

/**
 * Cached n ↦ scale·P_n(λ) (derivative = false) or n ↦ scale·P_n'(λ)
 * (derivative = true). Values up to the cache bound are tabulated; larger n
 * fall back to the recurrence.
 */
class PolyFunction {
 public:
  PolyFunction(ThreeTermRecurrence rec, Complex lambda, Complex scale, bool derivative, std::size_t cache_n = 0);

  Complex operator()(std::size_t n) const;

  Complex lambda() const { return lambda_; }

 private:
  ThreeTermRecurrence rec_;
  Complex lambda_;
  Complex scale_;
  bool derivative_;
  std::vector<Complex> cache_;
};

/// m_λ(n) = P_n(λ).
PolyFunction poly_exponential(const ThreeTermRecurrence& rec, Complex lambda, std::size_t cache_n = 0);
/// n ↦ c·P_n'(λ), an m_λ-sine function.
PolyFunction sine_fn(const ThreeTermRecurrence& rec, Complex c, Complex lambda, std::size_t cache_n = 0);

struct ReconstructedSine {
  std::vector<Complex> values;    // f(0..n_max) from the recursion
  std::vector<Complex> expected;  // (f1 / P_1'(λ))·P_n'(λ)
  ResidualReport deviation;       // |f - expected|, relative to 1 + |expected|
};

/**
 * Rebuilds an m_λ-sine function from f(0) = 0 and f(1) = f1 by solving
 * f(n*1) = f(n)P_1(λ) + f1·P_n(λ) for f(n+1), then compares with the
 * closed form. Throws TheoremViolation if the relative deviation exceeds tol.
 */
ReconstructedSine reconstruct_sine(const PolynomialHypergroup& hg, Complex lambda, Complex f1, std::size_t n_max,
                                   double tol = kVerificationTol);

/**
 * Ratio σ_min/σ_max of the (n_max+1)×2 matrix with columns P_n'(λ) and
 * P_n'(1)·P_n(λ). A ratio bounded away from 0 certifies that the two
 * functions are not proportional.
 */
double nonmultiplicativity_gap(const ThreeTermRecurrence& rec, Complex lambda, std::size_t n_max);

}  // namespace hypersine

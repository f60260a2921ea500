#pragma once

/**
 * Forward-mode dual numbers a + b·ε with ε² = 0.
 *
 * Every exponential family in the library is written once as a template over
 * its scalar type; instantiating it with Dual<std::complex<double>> seeded as
 * variable(λ) yields ∂_λΦ alongside Φ.
 */

#include <cmath>
#include <complex>
#include <type_traits>

namespace hypersine {

template <typename T>
struct Dual {
  using value_type = T;

  T val{};
  T deriv{};

  constexpr Dual() = default;
  constexpr Dual(T v) : val{v} {}  // NOLINT: implicit constants are intended
  constexpr Dual(T v, T d) : val{v}, deriv{d} {}
  template <typename U>
    requires(std::is_arithmetic_v<U> && !std::is_same_v<U, T>)
  constexpr Dual(U v) : val{static_cast<T>(v)} {}  // NOLINT

  constexpr Dual& operator+=(const Dual& o) {
    val += o.val;
    deriv += o.deriv;
    return *this;
  }
  constexpr Dual& operator-=(const Dual& o) {
    val -= o.val;
    deriv -= o.deriv;
    return *this;
  }
  constexpr Dual& operator*=(const Dual& o) {
    deriv = deriv * o.val + val * o.deriv;
    val *= o.val;
    return *this;
  }
  constexpr Dual& operator/=(const Dual& o) {
    const T inv = T(1) / o.val;
    deriv = (deriv - val * inv * o.deriv) * inv;
    val *= inv;
    return *this;
  }

  friend constexpr Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend constexpr Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend constexpr Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend constexpr Dual operator/(Dual a, const Dual& b) { return a /= b; }
  friend constexpr Dual operator-(const Dual& a) { return {-a.val, -a.deriv}; }
  friend constexpr Dual operator+(const Dual& a) { return a; }

  // Scalar mixing without promoting through Dual keeps the derivative exact.
  friend constexpr Dual operator*(const Dual& a, double s) { return {a.val * s, a.deriv * s}; }
  friend constexpr Dual operator*(double s, const Dual& a) { return {a.val * s, a.deriv * s}; }
  friend constexpr Dual operator/(const Dual& a, double s) { return {a.val / s, a.deriv / s}; }
  friend constexpr Dual operator+(const Dual& a, double s) { return {a.val + s, a.deriv}; }
  friend constexpr Dual operator+(double s, const Dual& a) { return {a.val + s, a.deriv}; }
  friend constexpr Dual operator-(const Dual& a, double s) { return {a.val - s, a.deriv}; }
  friend constexpr Dual operator-(double s, const Dual& a) { return {s - a.val, -a.deriv}; }

  friend constexpr bool operator==(const Dual&, const Dual&) = default;
};

using DualScalar = Dual<std::complex<double>>;

/// Seed for differentiation with respect to x.
template <typename T>
constexpr Dual<T> variable(T x) {
  return {x, T(1)};
}

template <typename T>
Dual<T> exp(const Dual<T>& a) {
  using std::exp;
  const T e = exp(a.val);
  return {e, e * a.deriv};
}

template <typename T>
Dual<T> log(const Dual<T>& a) {
  using std::log;
  return {log(a.val), a.deriv / a.val};
}

template <typename T>
Dual<T> sinh(const Dual<T>& a) {
  using std::cosh;
  using std::sinh;
  return {sinh(a.val), cosh(a.val) * a.deriv};
}

template <typename T>
Dual<T> cosh(const Dual<T>& a) {
  using std::cosh;
  using std::sinh;
  return {cosh(a.val), sinh(a.val) * a.deriv};
}

template <typename T>
Dual<T> sqrt(const Dual<T>& a) {
  using std::sqrt;
  const T r = sqrt(a.val);
  return {r, a.deriv / (T(2) * r)};
}

/// a^p for a constant real exponent.
template <typename T>
Dual<T> pow(const Dual<T>& a, double p) {
  using std::pow;
  return {pow(a.val, p), T(p) * pow(a.val, p - 1.0) * a.deriv};
}

/// b^a = exp(a·ln b) for a positive real base.
template <typename T>
Dual<T> pow(double base, const Dual<T>& a) {
  return exp(a * std::log(base));
}

// Uniform accessors so generic code can read plain and dual scalars alike.
template <typename T>
constexpr const T& value_of(const T& x) {
  return x;
}
template <typename T>
constexpr const T& value_of(const Dual<T>& x) {
  return x.val;
}

template <typename T>
struct is_dual : std::false_type {};
template <typename T>
struct is_dual<Dual<T>> : std::true_type {};
template <typename T>
inline constexpr bool is_dual_v = is_dual<T>::value;

}  // namespace hypersine

#include "hypersine/su2.hpp"

#include <algorithm>

namespace hypersine {

FiniteMeasure<std::size_t> su2_convolve(std::size_t k, std::size_t n) {
  const std::size_t lo = k > n ? k - n : n - k;
  const double denom = (static_cast<double>(k) + 1.0) * (static_cast<double>(n) + 1.0);
  std::vector<Atom<std::size_t>> atoms;
  atoms.reserve(std::min(k, n) + 1);
  for (std::size_t l = lo; l <= k + n; l += 2) atoms.push_back({l, (static_cast<double>(l) + 1.0) / denom});
  return FiniteMeasure<std::size_t>(std::move(atoms));
}

std::vector<Complex> su2_propagate_sine(Complex lambda, Complex f1, std::size_t n_max) {
  std::vector<Complex> f(std::max<std::size_t>(n_max + 1, 2), Complex(0.0));
  f[1] = f1;
  const Complex ch = std::cosh(lambda);
  for (std::size_t n = 0; n + 2 <= n_max; ++n) {
    const double x = static_cast<double>(n);
    const Complex forcing = 2.0 * f1 * (x + 2.0) * su2_phi(n + 1, lambda);
    f[n + 2] = (2.0 * (x + 2.0) * ch * f[n + 1] - (x + 1.0) * f[n] + forcing) / (x + 3.0);
  }
  f.resize(n_max + 1);
  return f;
}

std::vector<Complex> su2_propagate_homogeneous(Complex lambda, Complex psi0, Complex psi1, std::size_t n_max) {
  std::vector<Complex> psi(std::max<std::size_t>(n_max + 1, 2));
  psi[0] = psi0;
  psi[1] = psi1;
  const Complex ch = std::cosh(lambda);
  for (std::size_t n = 0; n + 2 < psi.size(); ++n) psi[n + 2] = 2.0 * ch * psi[n + 1] - psi[n];
  psi.resize(n_max + 1);
  return psi;
}

}  // namespace hypersine

#include "hypersine/finite.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"

namespace hypersine {

using json = nlohmann::json;

void FiniteHypergroupSpec::validate(double tol) const {
  if (size == 0) throw ArgumentError("finite spec '" + name + "': size must be positive");
  if (tensor.size() != size * size * size)
    throw ArgumentError("finite spec '" + name + "': tensor has " + std::to_string(tensor.size()) +
                        " entries, expected " + std::to_string(size * size * size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      double row = 0.0;
      for (std::size_t l = 0; l < size; ++l) {
        const double c = coeff(i, j, l);
        if (!std::isfinite(c) || c < -tol)
          throw ArgumentError("finite spec '" + name + "': coefficient c[" + std::to_string(i) + "][" +
                              std::to_string(j) + "][" + std::to_string(l) + "] is negative or non-finite");
        row += c;
      }
      if (std::abs(row - 1.0) > tol)
        throw ArgumentError("finite spec '" + name + "': row (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") sums to " + std::to_string(row));
    }
  for (std::size_t j = 0; j < size; ++j)
    for (std::size_t l = 0; l < size; ++l) {
      const double expected = l == j ? 1.0 : 0.0;
      if (std::abs(coeff(0, j, l) - expected) > tol || std::abs(coeff(j, 0, l) - expected) > tol)
        throw ArgumentError("finite spec '" + name + "': element 0 is not the identity");
    }
}

bool FiniteHypergroupSpec::is_commutative(double tol) const {
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      for (std::size_t l = 0; l < size; ++l)
        if (std::abs(coeff(i, j, l) - coeff(j, i, l)) > tol) return false;
  return true;
}

FiniteHypergroupSpec dtheta_spec(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw ArgumentError("D(theta) requires 0 < theta < 1");
  FiniteHypergroupSpec s;
  char buf[32];
  std::snprintf(buf, sizeof buf, "D(%.10g)", theta);
  s.name = buf;
  s.size = 2;
  s.tensor.assign(8, 0.0);
  s.coeff(0, 0, 0) = 1.0;
  s.coeff(0, 1, 1) = 1.0;
  s.coeff(1, 0, 1) = 1.0;
  s.coeff(1, 1, 0) = theta;
  s.coeff(1, 1, 1) = 1.0 - theta;
  return s;
}

FiniteHypergroupSpec parse_finite_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("finite spec: malformed JSON: ") + e.what());
  }
  FiniteHypergroupSpec s;
  try {
    s.name = doc.value("name", std::string("unnamed"));
    s.size = doc.at("size").get<std::size_t>();
    const auto& t = doc.at("tensor");
    if (t.size() != s.size) throw ArgumentError("finite spec: tensor outer dimension differs from size");
    s.tensor.reserve(s.size * s.size * s.size);
    for (const auto& plane : t) {
      if (plane.size() != s.size) throw ArgumentError("finite spec: tensor middle dimension differs from size");
      for (const auto& row : plane) {
        if (row.size() != s.size) throw ArgumentError("finite spec: tensor inner dimension differs from size");
        for (const auto& c : row) s.tensor.push_back(c.get<double>());
      }
    }
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("finite spec: ") + e.what());
  }
  s.validate();
  return s;
}

FiniteHypergroupSpec load_finite_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open finite spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_finite_spec(ss.str());
}

std::string to_json(const FiniteHypergroupSpec& spec) {
  json t = json::array();
  for (std::size_t i = 0; i < spec.size; ++i) {
    json plane = json::array();
    for (std::size_t j = 0; j < spec.size; ++j) {
      json row = json::array();
      for (std::size_t l = 0; l < spec.size; ++l) row.push_back(spec.coeff(i, j, l));
      plane.push_back(std::move(row));
    }
    t.push_back(std::move(plane));
  }
  return json{{"name", spec.name}, {"size", spec.size}, {"tensor", std::move(t)}}.dump();
}

std::vector<std::vector<Complex>> parse_listed_exponentials(const std::string& json_text) {
  std::vector<std::vector<Complex>> out;
  try {
    const json doc = json::parse(json_text);
    if (!doc.contains("exponentials")) return out;
    for (const auto& row : doc.at("exponentials")) {
      std::vector<Complex> m;
      for (const auto& v : row) {
        if (v.is_array())
          m.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        else
          m.emplace_back(v.get<double>(), 0.0);
      }
      out.push_back(std::move(m));
    }
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("finite spec exponentials: ") + e.what());
  }
  return out;
}

FiniteHypergroup::FiniteHypergroup(FiniteHypergroupSpec spec, double tol) : spec_(std::move(spec)) {
  spec_.validate(tol);
  commutative_ = spec_.is_commutative(tol);
}

FiniteMeasure<std::size_t> FiniteHypergroup::convolve(std::size_t i, std::size_t j) const {
  if (i >= spec_.size || j >= spec_.size)
    throw ArgumentError("finite hypergroup '" + spec_.name + "': element out of range");
  std::vector<Atom<std::size_t>> atoms;
  for (std::size_t l = 0; l < spec_.size; ++l) {
    const double c = spec_.coeff(i, j, l);
    if (c != 0.0) atoms.push_back({l, c});
  }
  return FiniteMeasure<std::size_t>(std::move(atoms));
}

std::vector<std::size_t> FiniteHypergroup::elements() const {
  std::vector<std::size_t> out(spec_.size);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

Complex TabulatedFunction::operator()(std::size_t i) const {
  if (i >= values_.size())
    throw EvaluationError("tabulated function has no value at " + std::to_string(i) + " (table size " +
                          std::to_string(values_.size()) + ")");
  return values_[i];
}

ResidualReport finite_exp_residual(const FiniteHypergroupSpec& spec, std::span<const Complex> m, Execution exec) {
  if (m.size() != spec.size) throw ArgumentError("exponential has wrong length for finite spec");
  const FiniteHypergroup hg(spec);
  const auto elems = hg.elements();
  const auto pairs = all_pairs<std::size_t>(elems);
  const TabulatedFunction mf({m.begin(), m.end()});
  return exp_residual(hg, mf, std::span(pairs), exec);
}

SineSpace sine_space(const FiniteHypergroupSpec& spec, std::span<const Complex> m, const SineSpaceOptions& opts) {
  const std::size_t n = spec.size;
  if (m.size() != n) throw ArgumentError("sine_space: exponential has wrong length");
  const auto exp_check = finite_exp_residual(spec, m);
  if (!exp_check.within_abs(opts.exp_tol))
    throw ArgumentError("sine_space: m is not an exponential (residual " + describe(exp_check.max_abs) + " at " +
                        exp_check.witness + ")");

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n * n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto row = static_cast<Eigen::Index>(i * n + j);
      for (std::size_t l = 0; l < n; ++l) a(row, static_cast<Eigen::Index>(l)) += spec.coeff(i, j, l);
      a(row, static_cast<Eigen::Index>(i)) -= m[j];
      a(row, static_cast<Eigen::Index>(j)) -= m[i];
    }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  SineSpace out;
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double factor = opts.cutoff_factor > 0.0
                            ? opts.cutoff_factor
                            : static_cast<double>(std::max(n * n, n)) * std::numeric_limits<double>::epsilon();
  const double largest = sv.size() ? sv(0) : 0.0;
  out.cutoff = factor * largest;

  const auto& v = svd.matrixV();
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    if (k < sv.size() && sv(k) > out.cutoff) continue;
    std::vector<Complex> f(n);
    for (std::size_t l = 0; l < n; ++l) f[l] = v(static_cast<Eigen::Index>(l), k);
    out.basis.push_back(std::move(f));
  }

  const FiniteHypergroup hg(spec);
  const auto elems = hg.elements();
  const auto pairs = all_pairs<std::size_t>(elems);
  const TabulatedFunction mf({m.begin(), m.end()});
  for (const auto& f : out.basis) {
    const auto r = sine_residual(hg, TabulatedFunction(f), mf, std::span(pairs));
    if (!r.within_abs(opts.sine_tol))
      throw TheoremViolation("sine_space: basis vector fails the sine equation (residual " + describe(r.max_abs) +
                             ")");
  }
  return out;
}

bool compact_vanishing_check(const FiniteHypergroupSpec& spec, std::span<const Complex> m,
                             const std::vector<std::vector<Complex>>& sine_basis, double tol) {
  if (m.size() != spec.size) return false;
  for (const auto& f : sine_basis) {
    if (f.size() != spec.size) return false;
    for (std::size_t y = 0; y < spec.size; ++y)
      if (std::abs(f[y] * m[y]) > tol) return false;
  }
  return true;
}

std::vector<std::vector<Complex>> find_exponentials(const FiniteHypergroupSpec& spec, double tol) {
  if (!spec.is_commutative()) throw ArgumentError("find_exponentials: spec '" + spec.name + "' is not commutative");
  const auto n = static_cast<Eigen::Index>(spec.size);
  // Fixed seed: the combination only has to avoid accidental eigenvalue ties.
  std::mt19937_64 gen(0x5eedULL);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < spec.size; ++i) {
    const double r = 0.5 + static_cast<double>(gen() >> 11) * 0x1.0p-53;
    for (std::size_t j = 0; j < spec.size; ++j)
      for (std::size_t l = 0; l < spec.size; ++l)
        b(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) += r * spec.coeff(i, j, l);
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(b);
  std::vector<std::vector<Complex>> out;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::VectorXcd v = es.eigenvectors().col(k);
    if (std::abs(v(0)) < 1e-8 * v.norm()) continue;
    std::vector<Complex> m(spec.size);
    for (std::size_t l = 0; l < spec.size; ++l) {
      Complex z = v(static_cast<Eigen::Index>(l)) / v(0);
      if (std::abs(z.imag()) < 1e-13) z.imag(0.0);
      if (std::abs(z.real()) < 1e-13) z.real(0.0);
      m[l] = z;
    }
    if (!finite_exp_residual(spec, m).within_abs(tol)) continue;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const std::vector<Complex>& o) {
      for (std::size_t l = 0; l < o.size(); ++l)
        if (std::abs(o[l] - m[l]) > std::sqrt(tol)) return false;
      return true;
    });
    if (!dup) out.push_back(std::move(m));
  }
  // Real part first, then imaginary, for a stable listing order.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    for (std::size_t l = 0; l < a.size(); ++l) {
      if (a[l].real() != b[l].real()) return a[l].real() > b[l].real();
      if (a[l].imag() != b[l].imag()) return a[l].imag() > b[l].imag();
    }
    return false;
  });
  return out;
}

}  // namespace hypersine

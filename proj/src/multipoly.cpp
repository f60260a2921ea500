#include "hypersine/multipoly.hpp"

#include <Eigen/Dense>
#include <numeric>

namespace hypersine {

ProductPolyHypergroup::ProductPolyHypergroup(std::vector<ThreeTermRecurrence> factors, std::size_t table_n_max) {
  if (factors.empty()) throw ArgumentError("product hypergroup needs at least one factor");
  factors_.reserve(factors.size());
  for (auto& f : factors) factors_.emplace_back(std::move(f), table_n_max);
}

void ProductPolyHypergroup::check_dims(std::size_t got, const char* what) const {
  if (got != factors_.size())
    throw ArgumentError(std::string("product hypergroup: ") + what + " has dimension " + std::to_string(got) +
                        ", expected " + std::to_string(factors_.size()));
}

FiniteMeasure<MultiIndex> ProductPolyHypergroup::convolve(const MultiIndex& x, const MultiIndex& y) const {
  check_dims(x.size(), "element");
  check_dims(y.size(), "element");
  std::vector<Atom<MultiIndex>> acc{{MultiIndex{}, 1.0}};
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const auto part = factors_[j].convolve(x[j], y[j]);
    std::vector<Atom<MultiIndex>> next;
    next.reserve(acc.size() * part.size());
    for (const auto& a : acc)
      for (const auto& b : part.support()) {
        MultiIndex e = a.element;
        e.push_back(b.element);
        next.push_back({std::move(e), a.weight * b.weight});
      }
    acc = std::move(next);
  }
  return FiniteMeasure<MultiIndex>(std::move(acc));
}

Complex ProductPolyHypergroup::q_eval(const MultiIndex& x, std::span<const Complex> lambda) const {
  check_dims(x.size(), "element");
  check_dims(lambda.size(), "lambda");
  Complex q{1.0};
  for (std::size_t j = 0; j < x.size(); ++j) q *= eval_P(factors_[j].recurrence(), x[j], lambda[j]);
  return q;
}

std::vector<Complex> ProductPolyHypergroup::q_grad(const MultiIndex& x, std::span<const Complex> lambda) const {
  check_dims(x.size(), "element");
  check_dims(lambda.size(), "lambda");
  const std::size_t d = x.size();
  std::vector<Complex> grad(d);
  for (std::size_t i = 0; i < d; ++i) {
    DualScalar q{Complex(1.0)};
    for (std::size_t j = 0; j < d; ++j) {
      const DualScalar lj = j == i ? variable(lambda[j]) : DualScalar(lambda[j]);
      q *= eval_P(factors_[j].recurrence(), x[j], lj);
    }
    grad[i] = q.deriv;
  }
  return grad;
}

Complex MultiSine::operator()(const MultiIndex& x) const {
  const auto g = hg->q_grad(x, lambda);
  Complex s{0.0};
  for (std::size_t j = 0; j < g.size(); ++j) s += c[j] * g[j];
  return s;
}

MultiSine multi_sine(const ProductPolyHypergroup& hg, std::vector<Complex> c, std::vector<Complex> lambda) {
  if (c.size() != hg.dimension()) throw ArgumentError("multi_sine: coefficient tuple has wrong length");
  if (lambda.size() != hg.dimension()) throw ArgumentError("multi_sine: lambda has wrong length");
  return {&hg, std::move(c), std::move(lambda)};
}

CoefficientFit fit_coefficients(const ProductPolyHypergroup& hg, const MultiFunction& f,
                                std::span<const Complex> lambda, std::size_t n_max) {
  const std::size_t d = hg.dimension();
  if (lambda.size() != d) throw ArgumentError("fit_coefficients: lambda has wrong length");
  const auto di = static_cast<Eigen::Index>(d);
  Eigen::MatrixXcd a(di, di);
  Eigen::VectorXcd rhs(di);
  for (std::size_t j = 0; j < d; ++j) {
    MultiIndex e(d, 0);
    e[j] = 1;
    const auto g = hg.q_grad(e, lambda);
    for (std::size_t i = 0; i < d; ++i) a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = g[i];
    rhs(static_cast<Eigen::Index>(j)) = f(e);
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0 || s(di - 1) / s(0) < 1e3 * std::numeric_limits<double>::epsilon() * static_cast<double>(d))
    throw DegenerateError("fit_coefficients: gradient matrix on unit elements is singular at this lambda");
  const Eigen::VectorXcd sol = svd.solve(rhs);

  CoefficientFit out;
  out.c.assign(sol.data(), sol.data() + sol.size());
  const auto elems = multi_indices_by_degree(d, n_max);
  const auto sweep = sweep_max(elems.size(), [&](std::size_t k) {
    const auto g = hg.q_grad(elems[k], lambda);
    Complex expected{0.0};
    for (std::size_t j = 0; j < d; ++j) expected += out.c[j] * g[j];
    const double r = std::abs(f(elems[k]) - expected);
    return SampleResidual{r, r / (1.0 + std::abs(expected))};
  });
  out.verification = make_report(sweep, std::span<const MultiIndex>(elems));
  return out;
}

std::vector<MultiIndex> multi_indices_box(std::size_t d, std::size_t max_coord) {
  std::vector<MultiIndex> out{MultiIndex{}};
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<MultiIndex> next;
    next.reserve(out.size() * (max_coord + 1));
    for (const auto& p : out)
      for (std::size_t v = 0; v <= max_coord; ++v) {
        auto e = p;
        e.push_back(v);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<MultiIndex> multi_indices_by_degree(std::size_t d, std::size_t max_degree) {
  std::vector<MultiIndex> out;
  for (auto& x : multi_indices_box(d, max_degree))
    if (std::accumulate(x.begin(), x.end(), std::size_t{0}) <= max_degree) out.push_back(std::move(x));
  return out;
}

}  // namespace hypersine

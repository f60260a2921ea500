#include "hypersine/poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hypersine {

namespace {

// Linearization noise below this is dropped from the support.
constexpr double kPruneTol = 1e-15;

// One step of x·Q in the P-basis.
std::vector<double> times_x(const ThreeTermRecurrence& rec, const std::vector<double>& q) {
  std::vector<double> out(q.size() + 1, 0.0);
  for (std::size_t m = 0; m < q.size(); ++m) {
    if (q[m] == 0.0) continue;
    const auto cm = rec.at(m);
    out[m + 1] += cm.a * q[m];
    out[m] += cm.b * q[m];
    if (m > 0) out[m - 1] += cm.c * q[m];
  }
  return out;
}

// Q_j = P_n·P_j in the P-basis for j = 0..k, written into emit(j, coeffs).
template <typename Emit>
void linearization_rows(const ThreeTermRecurrence& rec, std::size_t n, std::size_t k, Emit&& emit) {
  std::vector<double> prev;
  std::vector<double> cur(n + 1, 0.0);
  cur[n] = 1.0;
  emit(0, cur);
  for (std::size_t j = 0; j < k; ++j) {
    const auto cj = rec.at(j);
    std::vector<double> next = times_x(rec, cur);
    for (std::size_t l = 0; l < cur.size(); ++l) next[l] -= cj.b * cur[l];
    if (j > 0)
      for (std::size_t l = 0; l < prev.size(); ++l) next[l] -= cj.c * prev[l];
    for (auto& v : next) v /= cj.a;
    prev = std::move(cur);
    cur = std::move(next);
    emit(j + 1, cur);
  }
}

FiniteMeasure<std::size_t> to_measure(const ThreeTermRecurrence& rec, std::size_t n, std::size_t k,
                                      const std::vector<double>& coeffs) {
  std::vector<Atom<std::size_t>> atoms;
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    if (coeffs[l] < -kLinearizationNegTol)
      throw NotHypergroupError("not a hypergroup recurrence: '" + rec.name() + "' has c(" + std::to_string(n) + "," +
                               std::to_string(k) + "," + std::to_string(l) + ") = " + describe(coeffs[l]));
    if (std::abs(coeffs[l]) > kPruneTol) atoms.push_back({l, coeffs[l]});
  }
  return FiniteMeasure<std::size_t>(std::move(atoms));
}

}  // namespace

ThreeTermRecurrence::ThreeTermRecurrence(std::string name, Generator gen, std::optional<std::size_t> last_index)
    : name_(std::move(name)), gen_(std::move(gen)), last_(last_index) {}

ThreeTermRecurrence ThreeTermRecurrence::chebyshev() {
  return {"chebyshev", [](std::size_t n) {
            return n == 0 ? RecurrenceCoeffs{1.0, 0.0, 0.0} : RecurrenceCoeffs{0.5, 0.0, 0.5};
          }};
}

ThreeTermRecurrence ThreeTermRecurrence::legendre() {
  return {"legendre", [](std::size_t n) {
            const double d = 2.0 * static_cast<double>(n) + 1.0;
            return RecurrenceCoeffs{(static_cast<double>(n) + 1.0) / d, 0.0, static_cast<double>(n) / d};
          }};
}

ThreeTermRecurrence ThreeTermRecurrence::from_table(std::string name, std::vector<double> a, std::vector<double> b,
                                                    std::vector<double> c) {
  if (a.empty() || a.size() != b.size() || a.size() != c.size())
    throw ArgumentError("recurrence '" + name + "': a, b, c must be non-empty and of equal length");
  const std::size_t last = a.size() - 1;
  ThreeTermRecurrence rec(std::move(name),
                          [a = std::move(a), b = std::move(b), c = std::move(c)](std::size_t n) {
                            return RecurrenceCoeffs{a[n], b[n], n == 0 ? 0.0 : c[n]};
                          },
                          last);
  rec.validate(last);
  return rec;
}

RecurrenceCoeffs ThreeTermRecurrence::at(std::size_t n) const {
  if (last_ && n > *last_)
    throw ArgumentError("recurrence '" + name_ + "' has no coefficients at n = " + std::to_string(n) +
                        " (table ends at " + std::to_string(*last_) + ")");
  return gen_(n);
}

void ThreeTermRecurrence::validate(std::size_t up_to, double tol) const {
  const auto c0 = at(0);
  if (!(c0.a > 0.0) || std::abs(c0.a + c0.b - 1.0) > tol)
    throw ArgumentError("recurrence '" + name_ + "': need a_0 > 0 and a_0 + b_0 = 1");
  for (std::size_t n = 1; n <= up_to; ++n) {
    const auto cn = at(n);
    if (!(cn.a > 0.0) || !(cn.c > 0.0))
      throw ArgumentError("recurrence '" + name_ + "': a_n and c_n must be positive (n = " + std::to_string(n) + ")");
    if (std::abs(cn.a + cn.b + cn.c - 1.0) > tol)
      throw ArgumentError("recurrence '" + name_ + "': a_n + b_n + c_n != 1 at n = " + std::to_string(n));
  }
}

ThreeTermRecurrence builtin_recurrence(const std::string& name) {
  if (name == "chebyshev") return ThreeTermRecurrence::chebyshev();
  if (name == "legendre") return ThreeTermRecurrence::legendre();
  throw ArgumentError("unknown built-in recurrence '" + name + "'");
}

ThreeTermRecurrence parse_recurrence(const std::string& json_text) {
  using nlohmann::json;
  try {
    const json doc = json::parse(json_text);
    const std::string name = doc.value("name", std::string("unnamed"));
    if (doc.contains("closed_form") && !doc.at("closed_form").is_null()) {
      auto rec = builtin_recurrence(doc.at("closed_form").get<std::string>());
      return {name, [rec](std::size_t n) { return rec.at(n); }};
    }
    return ThreeTermRecurrence::from_table(name, doc.at("a").get<std::vector<double>>(),
                                           doc.at("b").get<std::vector<double>>(),
                                           doc.at("c").get<std::vector<double>>());
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("recurrence spec: ") + e.what());
  }
}

ThreeTermRecurrence load_recurrence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open recurrence file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_recurrence(ss.str());
}

Complex eval_dP(const ThreeTermRecurrence& rec, std::size_t n, Complex lambda) {
  return eval_P(rec, n, variable(lambda)).deriv;
}

FiniteMeasure<std::size_t> linearize(const ThreeTermRecurrence& rec, std::size_t n, std::size_t k) {
  // Iterate over the smaller index; the product is symmetric.
  const std::size_t big = std::max(n, k), small = std::min(n, k);
  FiniteMeasure<std::size_t> out;
  linearization_rows(rec, big, small, [&](std::size_t j, const std::vector<double>& q) {
    if (j == small) out = to_measure(rec, n, k, q);
  });
  return out;
}

LinearizationTable::LinearizationTable(const ThreeTermRecurrence& rec, std::size_t n_max)
    : n_max_(n_max), rows_((n_max + 1) * (n_max + 1)) {
  for (std::size_t n = 0; n <= n_max; ++n) {
    linearization_rows(rec, n, n, [&](std::size_t j, const std::vector<double>& q) {
      auto m = to_measure(rec, n, j, q);
      rows_[j * (n_max + 1) + n] = m;
      rows_[n * (n_max + 1) + j] = std::move(m);
    });
  }
}

const FiniteMeasure<std::size_t>& LinearizationTable::at(std::size_t n, std::size_t k) const {
  if (n > n_max_ || k > n_max_) throw ArgumentError("linearization table: index beyond n_max");
  return rows_[n * (n_max_ + 1) + k];
}

double LinearizationTable::max_mass_error() const {
  double e = 0.0;
  for (const auto& r : rows_) e = std::max(e, std::abs(r.mass() - 1.0));
  return e;
}

double LinearizationTable::min_coefficient() const {
  double lo = 1.0;
  for (const auto& r : rows_)
    for (const auto& a : r.support()) lo = std::min(lo, a.weight);
  return lo;
}

PolynomialHypergroup::PolynomialHypergroup(ThreeTermRecurrence rec, std::size_t table_n_max)
    : rec_(std::move(rec)) {
  // Row n of the table needs coefficients up to index 2n - 1.
  if (const auto last = rec_.last_index()) table_n_max = std::min(table_n_max, (*last + 1) / 2);
  table_ = std::make_shared<const LinearizationTable>(rec_, table_n_max);
}

FiniteMeasure<std::size_t> PolynomialHypergroup::convolve(std::size_t n, std::size_t k) const {
  if (n <= table_->n_max() && k <= table_->n_max()) return table_->at(n, k);
  return linearize(rec_, n, k);
}

PolyFunction::PolyFunction(ThreeTermRecurrence rec, Complex lambda, Complex scale, bool derivative,
                           std::size_t cache_n)
    : rec_(std::move(rec)), lambda_(lambda), scale_(scale), derivative_(derivative) {
  if (cache_n == 0) return;
  if (derivative_) {
    const auto p = eval_P_all(rec_, cache_n, variable(lambda_));
    cache_.reserve(p.size());
    for (const auto& v : p) cache_.push_back(scale_ * v.deriv);
  } else {
    const auto p = eval_P_all(rec_, cache_n, lambda_);
    cache_.reserve(p.size());
    for (const auto& v : p) cache_.push_back(scale_ * v);
  }
}

Complex PolyFunction::operator()(std::size_t n) const {
  if (n < cache_.size()) return cache_[n];
  if (scale_ == Complex(0.0)) return Complex(0.0);
  return scale_ * (derivative_ ? eval_dP(rec_, n, lambda_) : eval_P(rec_, n, lambda_));
}

PolyFunction poly_exponential(const ThreeTermRecurrence& rec, Complex lambda, std::size_t cache_n) {
  return {rec, lambda, Complex(1.0), false, cache_n};
}

PolyFunction sine_fn(const ThreeTermRecurrence& rec, Complex c, Complex lambda, std::size_t cache_n) {
  return {rec, lambda, c, true, cache_n};
}

ReconstructedSine reconstruct_sine(const PolynomialHypergroup& hg, Complex lambda, Complex f1, std::size_t n_max,
                                   double tol) {
  const auto& rec = hg.recurrence();
  const auto p = eval_P_all(rec, n_max, lambda);
  const auto dp = eval_P_all(rec, n_max, variable(lambda));
  ReconstructedSine out;
  out.values.assign(n_max + 1, Complex(0.0));
  if (n_max >= 1) out.values[1] = f1;
  const Complex p1 = n_max >= 1 ? p[1] : eval_P(rec, 1, lambda);
  for (std::size_t n = 1; n + 1 <= n_max; ++n) {
    const auto conv = hg.convolve(n, 1);
    // f(n*1) = Σ_l c(n,1,l) f(l) with l in {n-1, n, n+1}
    Complex known = f1 * p[n] + p1 * out.values[n];
    double lead = 0.0;
    for (const auto& a : conv.support()) {
      if (a.element == n + 1)
        lead = a.weight;
      else
        known -= a.weight * out.values[a.element];
    }
    if (lead == 0.0) throw DegenerateError("reconstruct_sine: vanishing leading coefficient at n = " + std::to_string(n));
    out.values[n + 1] = known / lead;
  }

  const Complex dp1 = eval_dP(rec, 1, lambda);
  out.expected.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out.expected[n] = f1 / dp1 * dp[n].deriv;

  const auto sweep = sweep_max_serial(n_max + 1, [&](std::size_t n) {
    const double a = std::abs(out.values[n] - out.expected[n]);
    return SampleResidual{a, a / (1.0 + std::abs(out.expected[n]))};
  });
  out.deviation.max_abs = sweep.max_abs;
  out.deviation.max_rel = sweep.max_rel;
  out.deviation.samples = sweep.samples;
  out.deviation.witness_index = sweep.witness;
  out.deviation.witness = "n=" + std::to_string(sweep.witness);
  if (!(out.deviation.max_rel <= tol))
    throw TheoremViolation("reconstruct_sine: recursion deviates from f1·P_n'(λ) by " + describe(out.deviation.max_rel) +
                           " at " + out.deviation.witness);
  return out;
}

double nonmultiplicativity_gap(const ThreeTermRecurrence& rec, Complex lambda, std::size_t n_max) {
  const auto dl = eval_P_all(rec, n_max, variable(lambda));
  const auto d1 = eval_P_all(rec, n_max, variable(Complex(1.0)));
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(n_max + 1), 2);
  for (std::size_t n = 0; n <= n_max; ++n) {
    m(static_cast<Eigen::Index>(n), 0) = dl[n].deriv;
    m(static_cast<Eigen::Index>(n), 1) = d1[n].deriv * dl[n].val;
  }
  for (Eigen::Index j = 0; j < 2; ++j) {
    const double norm = m.col(j).norm();
    if (norm == 0.0) return 0.0;
    m.col(j) /= norm;
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  return s(0) > 0.0 ? s(1) / s(0) : 0.0;
}

}  // namespace hypersine

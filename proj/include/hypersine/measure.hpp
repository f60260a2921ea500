#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hypersine/error.hpp"

namespace hypersine {

/// Weight tolerance used when building convolutions.
inline constexpr double kConstructionTol = 1e-12;
/// Default tolerance of the verification suites.
inline constexpr double kVerificationTol = 1e-9;

template <typename E>
struct Atom {
  E element;
  double weight;
};

/**
 * Finitely supported measure Σ w_i δ_{x_i}.
 *
 * The support is kept sorted by element with duplicates merged, so two
 * measures with the same atoms compare equal regardless of how they were
 * assembled.
 */
template <std::totally_ordered E>
class FiniteMeasure {
 public:
  using element_type = E;

  FiniteMeasure() = default;

  explicit FiniteMeasure(std::vector<Atom<E>> atoms) : atoms_(std::move(atoms)) { canonicalize(); }

  FiniteMeasure(std::initializer_list<Atom<E>> atoms) : atoms_(atoms) { canonicalize(); }

  static FiniteMeasure point(E x) { return FiniteMeasure({Atom<E>{std::move(x), 1.0}}); }

  const std::vector<Atom<E>>& support() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  double mass() const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.weight;
    return s;
  }

  double weight_of(const E& x) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                               [](const Atom<E>& a, const E& v) { return a.element < v; });
    return (it != atoms_.end() && it->element == x) ? it->weight : 0.0;
  }

  bool is_point_mass_at(const E& x) const {
    return atoms_.size() == 1 && atoms_.front().element == x && atoms_.front().weight == 1.0;
  }

  /// True iff weights sum to 1 and none is below -tol.
  bool is_probability(double tol = kConstructionTol) const {
    if (std::abs(mass() - 1.0) > tol) return false;
    return std::all_of(atoms_.begin(), atoms_.end(),
                       [tol](const Atom<E>& a) { return a.weight >= -tol; });
  }

  void require_probability(double tol = kConstructionTol) const {
    if (!is_probability(tol))
      throw ArgumentError("measure is not a probability measure (mass " + std::to_string(mass()) + ")");
  }

  /// Drops atoms with |weight| <= tol. Used to clean cancellation noise.
  FiniteMeasure pruned(double tol) const {
    std::vector<Atom<E>> kept;
    kept.reserve(atoms_.size());
    for (const auto& a : atoms_)
      if (std::abs(a.weight) > tol) kept.push_back(a);
    FiniteMeasure out;
    out.atoms_ = std::move(kept);
    return out;
  }

  friend bool operator==(const FiniteMeasure& a, const FiniteMeasure& b) {
    if (a.atoms_.size() != b.atoms_.size()) return false;
    for (std::size_t i = 0; i < a.atoms_.size(); ++i)
      if (!(a.atoms_[i].element == b.atoms_[i].element) || a.atoms_[i].weight != b.atoms_[i].weight)
        return false;
    return true;
  }

 private:
  void canonicalize() {
    std::stable_sort(atoms_.begin(), atoms_.end(),
                     [](const Atom<E>& a, const Atom<E>& b) { return a.element < b.element; });
    std::vector<Atom<E>> merged;
    merged.reserve(atoms_.size());
    for (auto& a : atoms_) {
      if (!merged.empty() && merged.back().element == a.element)
        merged.back().weight += a.weight;
      else
        merged.push_back(std::move(a));
    }
    atoms_ = std::move(merged);
  }

  std::vector<Atom<E>> atoms_;
};

/// Largest weight difference between two measures over the union of supports.
template <typename E>
double max_weight_difference(const FiniteMeasure<E>& a, const FiniteMeasure<E>& b) {
  double d = 0.0;
  for (const auto& x : a.support()) d = std::max(d, std::abs(x.weight - b.weight_of(x.element)));
  for (const auto& x : b.support()) d = std::max(d, std::abs(x.weight - a.weight_of(x.element)));
  return d;
}

}  // namespace hypersine

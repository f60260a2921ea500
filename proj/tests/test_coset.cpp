#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hypersine/coset.hpp"
#include "hypersine/hypergroup.hpp"

using namespace hypersine;

TEST_SUITE("cosethg") {

TEST_CASE("affine group") {
  CHECK(group_mul({2.0, 3.0}, {0.5, -1.0}) == AffineElement(1.0, 1.0));
  const AffineElement p(-4.0, 2.5);
  CHECK(group_mul(p, group_inv(p)) == AffineElement(1.0, 0.0));
  CHECK(group_mul(group_inv(p), p) == AffineElement(1.0, 0.0));
  CHECK_THROWS_AS(AffineElement(0.0, 1.0), ArgumentError);
}

TEST_CASE("the reflection subgroup is not normal") {
  const AffineElement p(3.0, 1.5);
  const auto conj = group_mul(group_mul(p, AffineElement(-1.0, 0.0)), group_inv(p));
  CHECK(conj == AffineElement(-1.0, 3.0));
}

TEST_CASE("double cosets") {
  CHECK(DoubleCoset(-2.0, -3.0) == DoubleCoset(2.0, 3.0));
  const auto members = coset_members(DoubleCoset(2.0, 1.0));
  for (const auto& g : members) CHECK(canonical(g) == DoubleCoset(2.0, 1.0));
  const CosetHypergroup hg;
  CHECK(hg.convolve(hg.identity(), DoubleCoset(2.0, 1.0)).is_point_mass_at(DoubleCoset(2.0, 1.0)));
  const auto mu = hg.convolve(DoubleCoset(2.0, 1.0), DoubleCoset(3.0, 1.0));
  CHECK(mu.weight_of(DoubleCoset(6.0, 3.0)) == doctest::Approx(0.5));
  CHECK(mu.weight_of(DoubleCoset(6.0, 1.0)) == doctest::Approx(0.5));
}

TEST_CASE("coset_apply and the standard functions") {
  const auto f0 = coset_sine(1.0, 0.0);
  CHECK(std::abs(coset_apply(f0, {2.0, 0.0}, {3.0, 0.0}) - std::log(6.0)) < 1e-15);
  CHECK(std::abs(coset_exponential(2.0)(DoubleCoset(3.0, 5.0)) - 9.0) < 1e-13);
  CHECK(std::abs(coset_sine(1.0, 1.0)(DoubleCoset(std::numbers::e, 7.0)) - std::numbers::e) < 1e-14);
}

TEST_CASE("exponential and sine equations") {
  const CosetHypergroup hg;
  const auto aff = sample_affine_pairs(7, 200);
  const auto pairs = to_coset_pairs(aff);
  for (const Complex l : {Complex(0.0), Complex(1.0), Complex(0.5, 0.5)}) {
    CHECK(exp_residual(hg, coset_exponential(l), std::span(pairs)).max_rel <= 1e-12);
    CHECK(sine_residual(hg, coset_sine(Complex(0.3, -1.2), l), coset_exponential(l), std::span(pairs)).max_rel <=
          1e-12);
    const auto g = group_sine_check(l, aff);
    CHECK(g.additive.max_rel <= 1e-12);
    CHECK(g.sine.max_rel <= 1e-12);
  }
}

TEST_CASE("d'Alembert candidates with alpha != 0 fail") {
  const QuadSample s{2.0, 1.0, 1.0, 1.0};
  CHECK(std::abs(falsify_dalembert_alpha(0.0, 1.0, std::span(&s, 1)).max_abs - 6.848546939509378) < 1e-9);
  CHECK_THROWS_AS(falsify_dalembert_alpha(0.0, 0.0, std::span(&s, 1)), ArgumentError);
}

TEST_CASE("square norm and quadratic candidates") {
  const std::vector<std::pair<double, double>> uv{{1.5, -2.0}, {0.0, 3.0}};
  CHECK(square_norm_check(1.0, uv).max_rel <= 1e-15);
  const CosetHypergroup hg;
  const std::pair<DoubleCoset, DoubleCoset> w{DoubleCoset(2.0, 1.0), DoubleCoset(3.0, 1.0)};
  const QuadraticCandidate cand{1.0, 1.0, 1.0};
  CHECK(sine_residual(hg, cand, coset_exponential(1.0), std::span(&w, 1)).max_abs > 0.5);
  const QuadraticCandidate pure{1.0, 0.0, 1.0};
  CHECK(sine_residual(hg, pure, coset_exponential(1.0), std::span(&w, 1)).max_abs < 1e-12);
}

TEST_CASE("compatibility of coset functions") {
  std::vector<AffineElement> singles{{2.0, 1.0}, {-0.5, 3.0}, {7.0, -2.0}};
  CHECK(verify_compat([](const AffineElement& g) { return Complex(std::log(std::abs(g.x))); }, singles));
  CHECK_FALSE(verify_compat([](const AffineElement& g) { return Complex(g.u); }, singles));
}

TEST_CASE("sampling is reproducible") {
  const auto a = sample_affine_pairs(42, 50), b = sample_affine_pairs(42, 50);
  CHECK(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first);
    CHECK(a[i].second == b[i].second);
  }
}

}  // TEST_SUITE

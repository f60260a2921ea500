#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "hypersine/dual.hpp"
#include "hypersine/finite.hpp"
#include "hypersine/hypergroup.hpp"
#include "hypersine/poly.hpp"
#include "hypersine/suite.hpp"
#include "hypersine/su2.hpp"
#include "oracles.hpp"

using namespace hypersine;

TEST_SUITE("hcore") {

TEST_CASE("finite measure merges duplicates and sorts") {
  const FiniteMeasure<std::size_t> mu({{2, 0.25}, {0, 0.5}, {2, 0.25}});
  REQUIRE(mu.size() == 2);
  CHECK(mu.support()[0].element == 0);
  CHECK(mu.weight_of(2) == doctest::Approx(0.5));
  CHECK(mu.weight_of(7) == 0.0);
  CHECK(mu.is_probability(1e-12));
}

TEST_CASE("integrate") {
  const FiniteMeasure<std::size_t> mu({{0, 0.25}, {2, 0.75}});
  CHECK(std::abs(integrate<std::size_t>([](std::size_t) { return 1.0; }, mu) - 1.0) < 1e-15);
  CHECK(std::abs(integrate<std::size_t>([](std::size_t l) { return l == 0 ? 1.0 : 0.0; }, mu) - 0.25) == 0.0);

  const auto d11 = su2_convolve(1, 1);
  const Complex v = integrate<std::size_t>([](std::size_t l) { return static_cast<double>(l) + 1.0; }, d11);
  CHECK(std::abs(v - 2.5) < 1e-15);
}

TEST_CASE("integrate names the element where f fails") {
  const TabulatedFunction f(std::vector<Complex>{1.0, 2.0});
  const FiniteMeasure<std::size_t> mu({{0, 0.5}, {5, 0.5}});
  try {
    integrate(f, mu);
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(std::string(e.what()).find("element 5") != std::string::npos);
  }
}

TEST_CASE("convolve_power") {
  const FiniteHypergroup d(dtheta_spec(0.5));
  const auto p2 = convolve_power(d, std::size_t{1}, 2);
  CHECK(p2.weight_of(0) == doctest::Approx(0.5));
  CHECK(p2.weight_of(1) == doctest::Approx(0.5));
  CHECK(convolve_power(d, std::size_t{0}, 5).is_point_mass_at(0));

  const PolynomialHypergroup cheb(ThreeTermRecurrence::chebyshev(), 16);
  const auto c2 = convolve_power(cheb, std::size_t{1}, 2);
  CHECK(c2.size() == 2);
  CHECK(c2.weight_of(0) == doctest::Approx(0.5));
  CHECK(c2.weight_of(2) == doctest::Approx(0.5));

  CHECK_THROWS_AS(convolve_power(cheb, std::size_t{1}, 0), ArgumentError);
  CHECK_THROWS_AS(convolve_power(cheb, std::size_t{3}, 5, 2), ResourceError);
}

TEST_CASE("identity convolution is an exact point mass") {
  const PolynomialHypergroup cheb(ThreeTermRecurrence::chebyshev(), 16);
  const Su2Hypergroup su2;
  const FiniteHypergroup s3(s3_class_spec());
  for (std::size_t x = 0; x < 10; ++x) {
    CHECK(cheb.convolve(0, x).is_point_mass_at(x));
    CHECK(cheb.convolve(x, 0).is_point_mass_at(x));
    CHECK(su2.convolve(0, x).is_point_mass_at(x));
    CHECK(su2.convolve(x, 0).is_point_mass_at(x));
  }
  for (std::size_t x = 0; x < 3; ++x) CHECK(s3.convolve(0, x).is_point_mass_at(x));
}

TEST_CASE("sine_residual basics") {
  const FiniteHypergroup d(dtheta_spec(0.3));
  const std::vector<std::pair<std::size_t, std::size_t>> pair11{{1, 1}};
  const TabulatedFunction m1(std::vector<Complex>{1.0, -0.3});
  const TabulatedFunction f(std::vector<Complex>{0.0, 1.0});
  const auto r = sine_residual(d, f, m1, std::span(pair11));
  CHECK(r.max_abs == doctest::Approx(1.3).epsilon(1e-14));
  CHECK(r.witness == "(1, 1)");

  const TabulatedFunction zero(std::vector<Complex>{0.0, 0.0});
  const auto all = all_pairs<std::size_t>(d.elements());
  CHECK(sine_residual(d, zero, m1, std::span(all)).max_abs == 0.0);

  const std::vector<std::pair<std::size_t, std::size_t>> none;
  CHECK_THROWS_AS(sine_residual(d, f, m1, std::span(none)), ArgumentError);
}

TEST_CASE("exp_residual basics") {
  const FiniteHypergroup d(dtheta_spec(0.4));
  const auto all = all_pairs<std::size_t>(d.elements());
  const auto one = [](std::size_t) { return Complex(1.0); };
  CHECK(exp_residual(d, one, std::span(all)).max_abs == 0.0);
  const TabulatedFunction m1(std::vector<Complex>{1.0, -0.4});
  CHECK(exp_residual(d, m1, std::span(all)).max_abs < 1e-16);

  const Su2Hypergroup su2;
  const auto pairs = index_pairs(20);
  CHECK(exp_residual(su2, Su2Exponential{0.3}, std::span(pairs)).max_rel <= 1e-10);
}

TEST_CASE("chebyshev sine residual at lambda = 0.7") {
  const PolynomialHypergroup cheb(ThreeTermRecurrence::chebyshev(), 16);
  const auto pairs = index_pairs(16);
  const auto m = poly_exponential(cheb.recurrence(), 0.7);
  const auto f = sine_fn(cheb.recurrence(), 1.0, 0.7);
  CHECK(sine_residual(cheb, f, m, std::span(pairs)).max_abs <= 1e-10);

  // Independent expansion T_n T_k = (T_{|n-k|} + T_{n+k}) / 2, differentiated in closed form.
  double worst = 0.0;
  for (const auto& [n, k] : pairs) {
    const double lhs = 0.5 * (oracle::chebyshev_dT(n > k ? n - k : k - n, 0.7) + oracle::chebyshev_dT(n + k, 0.7));
    const double rhs = oracle::chebyshev_dT(n, 0.7) * oracle::chebyshev_T(k, 0.7) +
                       oracle::chebyshev_dT(k, 0.7) * oracle::chebyshev_T(n, 0.7);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("power identity") {
  const FiniteHypergroup d(dtheta_spec(0.5));
  const TabulatedFunction zero(std::vector<Complex>{0.0, 0.0});
  const TabulatedFunction m1(std::vector<Complex>{1.0, -0.5});
  CHECK(power_identity_check(d, zero, m1, std::size_t{0}, std::size_t{1}, 8).max_abs == 0.0);

  const PolynomialHypergroup cheb(ThreeTermRecurrence::chebyshev(), 24);
  const auto m = poly_exponential(cheb.recurrence(), 0.9);
  const auto f = sine_fn(cheb.recurrence(), 1.0, 0.9);
  const auto r = power_identity_check(cheb, f, m, std::size_t{1}, std::size_t{2}, 6);
  CHECK(r.max_abs <= 1e-9);
  CHECK(r.samples == 6);

  // A non-sine function trips the identity, and the witness names the exponent.
  const auto g = poly_exponential(cheb.recurrence(), 0.3);
  const auto bad = power_identity_check(cheb, g, m, std::size_t{1}, std::size_t{2}, 6);
  CHECK(bad.max_abs > 0.1);
  CHECK(bad.witness.find("n=") != std::string::npos);
}

TEST_CASE("sine space of D(theta) is trivial") {
  for (double theta : {0.1, 0.25, 0.5, 0.9}) {
    const auto spec = dtheta_spec(theta);
    const std::vector<Complex> m0{1.0, 1.0}, m1{1.0, -theta};
    const auto s0 = sine_space(spec, m0);
    const auto s1 = sine_space(spec, m1);
    CHECK(s0.dimension() == 0);
    CHECK(s1.dimension() == 0);
    CHECK(compact_vanishing_check(spec, m1, s1.basis));
    CHECK(oracle::nullspace_dimension(oracle::sine_system(spec, m1)) == 0);
  }
}

TEST_CASE("sine space rejects a non-exponential") {
  const std::vector<Complex> bogus{1.0, 0.5};
  CHECK_THROWS_AS(sine_space(dtheta_spec(0.25), bogus), ArgumentError);
}

TEST_CASE("sine space agrees with an independent elimination") {
  std::vector<FiniteHypergroupSpec> specs{s3_class_spec(), cyclic_group_spec(4), cyclic_group_spec(3)};
  for (const auto& spec : specs) {
    for (const auto& m : find_exponentials(spec)) {
      const auto space = sine_space(spec, m);
      CHECK(space.dimension() == oracle::nullspace_dimension(oracle::sine_system(spec, m)));
      CHECK(compact_vanishing_check(spec, m, space.basis));
    }
  }
}

TEST_CASE("compact vanishing check with a vanishing exponential") {
  // m = (1, 0, -1/2) on the S3 classes vanishes at the transposition class.
  const auto spec = s3_class_spec();
  const std::vector<Complex> m{1.0, 0.0, -0.5};
  const auto space = sine_space(spec, m);
  CHECK(space.dimension() == oracle::nullspace_dimension(oracle::sine_system(spec, m)));
  CHECK(compact_vanishing_check(spec, m, space.basis));
  // A function supported where m vanishes passes the product test without being a sine function.
  CHECK(compact_vanishing_check(spec, m, {{0.0, 1.0, 0.0}}));
  CHECK_FALSE(compact_vanishing_check(spec, m, {{0.0, 0.0, 1.0}}));
  CHECK(compact_vanishing_check(spec, m, {{0.0, 0.0, 0.0}}));
}

TEST_CASE("Z2 characters carry no sine functions") {
  const auto spec = cyclic_group_spec(2);
  const std::vector<Complex> m{1.0, -1.0};
  CHECK(sine_space(spec, m).dimension() == 0);
}

TEST_CASE("find_exponentials recovers characters") {
  const auto s3 = find_exponentials(s3_class_spec());
  REQUIRE(s3.size() == 3);
  const auto z4 = find_exponentials(cyclic_group_spec(4));
  REQUIRE(z4.size() == 4);
  for (const auto& m : z4) CHECK(std::abs(std::pow(m[1], 4) - 1.0) < 1e-12);
}

TEST_CASE("finite spec parsing") {
  const std::string good = R"({"name": "D", "size": 2, "tensor": [[[1,0],[0,1]],[[0,1],[0.25,0.75]]],
                               "exponentials": [[1,1],[1,[-0.25,0]]]})";
  const auto spec = parse_finite_spec(good);
  CHECK(spec.size == 2);
  CHECK(spec.coeff(1, 1, 0) == 0.25);
  const auto exps = parse_listed_exponentials(good);
  REQUIRE(exps.size() == 2);
  CHECK(exps[1][1] == Complex(-0.25, 0.0));
  CHECK(parse_finite_spec(to_json(spec)).tensor == spec.tensor);

  CHECK_THROWS_AS(parse_finite_spec("{"), ArgumentError);
  CHECK_THROWS_AS(parse_finite_spec(R"({"size": 2, "tensor": [[[1,0],[0,1]],[[0,1],[0.5,0.6]]]})"), ArgumentError);
  CHECK_THROWS_AS(parse_finite_spec(R"({"size": 2, "tensor": [[[0,1],[1,0]],[[1,0],[0,1]]]})"), ArgumentError);
  CHECK_THROWS_AS(parse_finite_spec(R"({"size": 2, "tensor": [[[1,0],[0,1]],[[0,1],[-0.5,1.5]]]})"), ArgumentError);
  CHECK_THROWS_AS(dtheta_spec(1.0), ArgumentError);
}

TEST_CASE("linear combinations of sine functions stay sine functions") {
  const PolynomialHypergroup cheb(ThreeTermRecurrence::chebyshev(), 24);
  const auto pairs = index_pairs(12);
  const Complex lambda(0.4, 0.1);
  const auto m = poly_exponential(cheb.recurrence(), lambda);
  const auto f = sine_fn(cheb.recurrence(), 1.0, lambda);
  const double tol = sine_residual(cheb, f, m, std::span(pairs)).max_abs + 1e-15;
  for (const Complex alpha : {Complex(2.0, -1.0), Complex(-0.5, 3.0)})
    for (const Complex beta : {Complex(1.0), Complex(0.0, 4.0)}) {
      const auto g = [&](std::size_t n) { return alpha * f(n) + beta * 0.5 * f(n); };
      CHECK(sine_residual(cheb, g, m, std::span(pairs)).max_abs <= (std::abs(alpha) + std::abs(beta)) * 2.0 * tol);
    }
}

TEST_CASE("built-in convolutions are probability measures") {
  const PolynomialHypergroup leg(ThreeTermRecurrence::legendre(), 30);
  const Su2Hypergroup su2;
  for (std::size_t n = 0; n <= 30; ++n)
    for (std::size_t k = 0; k <= 30; ++k) {
      const auto a = leg.convolve(n, k), b = su2.convolve(n, k);
      CHECK(std::abs(a.mass() - 1.0) <= 1e-12);
      CHECK(std::abs(b.mass() - 1.0) <= 1e-12);
      for (const auto& atom : a.support()) CHECK(atom.weight >= -1e-12);
    }
}

TEST_CASE("dual arithmetic") {
  const DualScalar x = variable(Complex(0.3, 0.2));
  const auto y = x * x * 3.0 + sinh(x) / cosh(x) - exp(log(x));
  const Complex v = x.val;
  const Complex expected = 6.0 * v + 1.0 / (std::cosh(v) * std::cosh(v)) - 1.0;
  CHECK(std::abs(y.deriv - expected) < 1e-14);
  const auto s = sqrt(x);
  CHECK(std::abs(s.deriv - 0.5 / std::sqrt(v)) < 1e-14);
  const auto p = pow(x, 2.5);
  CHECK(std::abs(p.deriv - 2.5 * std::pow(v, 1.5)) < 1e-14);
  const auto q = pow(2.0, x);
  CHECK(std::abs(q.deriv - std::log(2.0) * std::pow(2.0, v)) < 1e-14);
}

}  // TEST_SUITE

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "extmax/field.hpp"
#include "extmax/quadrature.hpp"
#include "extmax/random.hpp"

using namespace extmax;

namespace {

constexpr double kPi = std::numbers::pi;

FieldTerm monomial(const Signature& sig, std::initializer_list<int> blade, std::vector<int> powers, double c = 1.0) {
  FieldTerm t{to_complex(Multivector::basis(sig, blade, c)), ScalarAtom{}, true};
  t.atom.powers = std::move(powers);
  return t;
}

FieldTerm cos_mode(const ComplexMultivector& amp, std::vector<double> xi, double phase = 0.0) {
  FieldTerm t{amp, ScalarAtom{}, true};
  t.atom.xi = std::move(xi);
  t.atom.phase = phase;
  return t;
}

}  // namespace

TEST_CASE("partial derivative of a cos mode") {
  const Signature sig(1, 3);
  auto f = MultivectorField::analytic(sig, 1, {cos_mode(to_complex(Multivector::basis(sig, {2})), {0, 1, 0, 0})});
  Point origin(4, 0.0), quarter = {0, 0.25, 0, 0};
  CHECK(f.partial_derivative(1, origin).max_abs() < 1e-15);
  auto d = f.partial_derivative(1, quarter);
  CHECK(d.coefficient({2}).real() == doctest::Approx(-2 * kPi));
  auto c = MultivectorField::constant(to_complex(Multivector::basis(sig, {1, 2})));
  CHECK(c.partial_derivative(0, quarter).is_zero());
  CHECK(f.evaluate(quarter).grade() == 1);
}

TEST_CASE("analytic gradient matches finite differences") {
  Rng rng(21);
  const Signature sig(2, 2);
  auto f = random_field(rng, sig, 2);
  Point x = random_point(rng, sig);
  const double h = 1e-5;
  for (int a = 0; a < 4; ++a) {
    Point xp = x, xm = x;
    xp[a] += h;
    xm[a] -= h;
    auto fd = (Complex(1.0 / (2 * h))) * (f.evaluate(xp) - f.evaluate(xm));
    CHECK(max_abs_diff(fd, f.partial_derivative(a, x)) < 1e-7);
  }
}

TEST_CASE("gradient, curl and divergence in (0,3)") {
  const Signature sig(0, 3);
  auto omega = MultivectorField::analytic(sig, 0, {monomial(sig, {}, {0, 1, 0})});
  Point x = {0.3, -0.7, 1.1};
  CHECK(max_abs_diff(exterior_derivative(omega, x), to_complex(Multivector::basis(sig, {1}))) < 1e-15);

  // v = (x1 x2, x0^2, x0 x1 x2)
  auto v = MultivectorField::analytic(
      sig, 1, {monomial(sig, {0}, {0, 1, 1}), monomial(sig, {1}, {2, 0, 0}), monomial(sig, {2}, {1, 1, 1})});
  auto curl = real_part(hodge(exterior_derivative(v, x)));
  CHECK(curl.coefficient({0}) == doctest::Approx(x[0] * x[2]));
  CHECK(curl.coefficient({1}) == doctest::Approx(x[1] - x[1] * x[2]));
  CHECK(curl.coefficient({2}) == doctest::Approx(2 * x[0] - x[2]));
  CHECK(interior_derivative(v, x).coefficient(Blade()).real() == doctest::Approx(x[0] * x[1]));
  auto c = MultivectorField::constant(to_complex(Multivector::basis(sig, {0})));
  CHECK(exterior_derivative(c, x).is_zero());
  CHECK(interior_derivative(c, x).is_zero());
}

TEST_CASE("symbolic and pointwise derivatives agree") {
  Rng rng(22);
  for (auto sig : {Signature(1, 2), Signature(2, 1)}) {
    auto f = random_field(rng, sig, 1);
    Point x = random_point(rng, sig);
    CHECK(max_abs_diff(exterior_derivative(f).evaluate(x), exterior_derivative(f, x)) < 1e-12);
    CHECK(max_abs_diff(interior_derivative(f).evaluate(x), interior_derivative(f, x)) < 1e-12);
  }
}

TEST_CASE("second-order derivative identity") {
  // d _| (d ^ v) = (-1)^gr(v) (d.d) v + d ^ (d _| v)
  Rng rng(23);
  for (auto sig : {Signature(1, 3), Signature(2, 2), Signature(0, 3)})
    for (int g = 0; g <= 2; ++g) {
      auto v = random_field(rng, sig, g);
      Point x = random_point(rng, sig);
      auto lhs = interior_derivative(exterior_derivative(v), x);
      auto box = dalembertian(v).evaluate(x);
      auto rhs = Complex(g % 2 ? -1.0 : 1.0) * box;
      if (g > 0) rhs += exterior_derivative(interior_derivative(v), x);
      CHECK(max_abs_diff(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("grid backend converges at second order") {
  const Signature sig(0, 2);
  auto f = MultivectorField::analytic(sig, 1, {cos_mode(to_complex(Multivector::vector(sig, {1.0, -0.5})), {0.3, 0.2}, 0.4)});
  Point x = {0.25, -0.5};
  auto exact = f.gradient(x);
  auto error_at = [&](double h) {
    int n = static_cast<int>(std::lround(2.0 / h)) + 1;
    auto g = sample_to_grid(f, {-1.0, -1.0}, {h, h}, {n, n});
    auto approx = g.gradient(x);
    double e = 0;
    for (int a = 0; a < 2; ++a) e = std::max(e, max_abs_diff(approx[a], exact[a]));
    return e;
  };
  double ratio = error_at(0.125) / error_at(0.0625);
  CHECK(ratio >= 3.5);
  CHECK(ratio <= 4.5);
  auto g = sample_to_grid(f, {-1.0, -1.0}, {0.25, 0.25}, {9, 9});
  CHECK_THROWS_AS(g.evaluate(Point{2.0, 0.0}), std::domain_error);
}

TEST_CASE("envelope decay bounds") {
  const Signature sig(1, 1);
  FieldTerm t = cos_mode(ComplexMultivector::scalar(sig, 1.0), {0.5, 0.5});
  t.atom.envelope = GaussianEnvelope{2.0, {1.0, -1.0}};
  auto f = MultivectorField::analytic(sig, 0, {t});
  auto b = f.decay_bounds(1e-12);
  REQUIRE(b);
  double r = 2.0 * std::sqrt(2 * std::log(1e12));
  CHECK((*b)[0].lo == doctest::Approx(1.0 - r));
  CHECK((*b)[1].hi == doctest::Approx(-1.0 + r));
  auto plain = MultivectorField::analytic(sig, 0, {cos_mode(ComplexMultivector::scalar(sig, 1.0), {0.5, 0.5})});
  CHECK_FALSE(plain.decay_bounds());
}

TEST_CASE("Gauss-Legendre rules") {
  // n points integrate degree 2n-1 exactly
  for (int n : {1, 2, 5, 12}) {
    const auto& rule = gauss_legendre(n);
    double s = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], 2 * n - 2);
    CHECK(s == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
  }
  auto c = composite_rule({0.0, kPi}, 8, 4);
  double s = 0;
  for (std::size_t i = 0; i < c.nodes.size(); ++i) s += c.weights[i] * std::sin(c.nodes[i]);
  CHECK(s == doctest::Approx(2.0).epsilon(1e-13));
}

// Randomized invariants over many signatures and grades.

#include <doctest.h>

#include "extmax/bitensor.hpp"
#include "extmax/classical.hpp"
#include "extmax/energy_momentum.hpp"
#include "extmax/maxwell.hpp"
#include "extmax/random.hpp"

using namespace extmax;

namespace {

std::vector<Signature> small_signatures() {
  std::vector<Signature> out;
  for (int d = 1; d <= 5; ++d)
    for (int k = 0; k <= d; ++k) out.emplace_back(k, d - k);
  return out;
}

double sgn(int e) { return e % 2 ? -1.0 : 1.0; }

}  // namespace

TEST_CASE("wedge is graded-commutative and associative") {
  Rng rng(71);
  for (const auto& sig : small_signatures()) {
    const int d = sig.dimension();
    for (int t = 0; t < 10; ++t) {
      int a = rng.integer(0, d), b = rng.integer(0, d), c = rng.integer(0, d);
      auto u = random_exact_multivector(rng, sig, a);
      auto v = random_exact_multivector(rng, sig, b);
      auto w = random_exact_multivector(rng, sig, c);
      CHECK(wedge(u, v) == static_cast<long long>(sgn(a * b)) * wedge(v, u));
      CHECK(wedge(wedge(u, v), w) == wedge(u, wedge(v, w)));
    }
  }
}

TEST_CASE("left and right interior products are related") {
  Rng rng(72);
  for (const auto& sig : small_signatures()) {
    const int d = sig.dimension();
    for (int t = 0; t < 10; ++t) {
      int a = rng.integer(0, d), b = rng.integer(a, d);
      auto u = random_exact_multivector(rng, sig, a);
      auto v = random_exact_multivector(rng, sig, b);
      CHECK(left_interior(u, v) == static_cast<long long>(sgn(a * (a + b))) * right_interior(v, u));
    }
  }
}

TEST_CASE("hodge round trip on random multivectors") {
  Rng rng(73);
  for (const auto& sig : small_signatures())
    for (int g = 0; g <= sig.dimension(); ++g) {
      auto v = random_multivector(rng, sig, g);
      CHECK(max_abs_diff(inv_hodge(hodge(v)), v) < 1e-15);
    }
}

TEST_CASE("odot and owedge are symmetric") {
  Rng rng(74);
  for (const auto& sig : small_signatures())
    for (int r = 1; r <= sig.dimension(); ++r) {
      auto f = random_multivector(rng, sig, r);
      for (int i = 0; i < sig.dimension(); ++i)
        for (int j = 0; j < sig.dimension(); ++j) {
          CHECK(odot_entry(f, f, i, j) == doctest::Approx(odot_entry(f, f, j, i)));
          CHECK(owedge_entry(f, f, i, j) == doctest::Approx(owedge_entry(f, f, j, i)));
        }
    }
}

TEST_CASE("stress tensor routes and trace law") {
  Rng rng(75);
  for (const auto& sig : small_signatures())
    for (int r = 1; r <= sig.dimension(); ++r)
      for (int t = 0; t < 3; ++t) {
        auto f = random_multivector(rng, sig, r);
        auto te = stress_tensor_explicit(f);
        CHECK((te - stress_tensor_def(f)).max_abs() < 1e-12);
        CHECK(trace(te) == doctest::Approx(trace_formula(f)).epsilon(1e-12).scale(1.0));
      }
}

TEST_CASE("derivatives are nilpotent") {
  Rng rng(76);
  for (const auto& sig : small_signatures()) {
    if (sig.dimension() > 4) continue;
    for (int g = 0; g <= sig.dimension(); ++g) {
      auto f = random_field(rng, sig, g);
      auto df = exterior_derivative(f), delta = interior_derivative(f);
      for (int p = 0; p < 5; ++p) {
        Point x = random_point(rng, sig);
        CHECK(exterior_derivative(df, x).max_abs() < 1e-10);
        CHECK(interior_derivative(delta, x).max_abs() < 1e-10);
      }
    }
  }
}

TEST_CASE("residuals are gauge invariant") {
  Rng rng(77);
  for (auto sig : {Signature(1, 3), Signature(2, 2), Signature(1, 2)})
    for (int r = 2; r <= 3; ++r) {
      auto a = random_field(rng, sig, r - 1);
      auto g = random_field(rng, sig, r - 2);
      auto j = random_field(rng, sig, r - 1);
      MaxwellSystem s1(field_from_potential(a), j), s2(field_from_potential(a + exterior_derivative(g)), j);
      Point x = random_point(rng, sig);
      auto r1 = maxwell_residuals(s1, x), r2 = maxwell_residuals(s2, x);
      CHECK(max_abs_diff(r1.inhomogeneous, r2.inhomogeneous) < 1e-10);
      CHECK(max_abs_diff(r1.homogeneous, r2.homogeneous) < 1e-10);
      CHECK(r1.homogeneous.max_abs() < 1e-10);
    }
}

TEST_CASE("vacuum potentials solve the source-free equations") {
  Rng rng(78);
  for (auto sig : {Signature(1, 3), Signature(2, 2), Signature(1, 2), Signature(2, 3)})
    for (int r = 1; r <= sig.dimension(); ++r) {
      MaxwellSystem sys(field_from_potential(random_vacuum_potential(rng, sig, r)));
      Point x = random_point(rng, sig);
      auto res = maxwell_residuals(sys, x);
      CHECK(res.inhomogeneous.max_abs() < 1e-10);
      CHECK(res.homogeneous.max_abs() < 1e-10);
    }
}

TEST_CASE("transverse bases have the predicted size") {
  Rng rng(79);
  for (auto sig : {Signature(1, 3), Signature(2, 2), Signature(1, 4), Signature(2, 3)})
    for (int r = 1; r <= sig.dimension() - 1; ++r) {
      std::optional<std::vector<double>> xi;
      while (!xi || (*xi)[0] < 0.1) {
        std::vector<double> bar(sig.dimension(), 0.0);
        for (int i = 1; i < sig.dimension(); ++i) bar[i] = rng.uniform();
        xi = null_frequency(sig, bar, 0);
      }
      auto basis = transverse_basis(sig, *xi, r);
      CHECK(static_cast<long long>(basis.size()) == dof_count(r, sig.time_dims(), sig.space_dims()));
    }
}

TEST_CASE("stress tensor divergence vanishes up to the source terms") {
  Rng rng(80);
  for (auto sig : {Signature(1, 2), Signature(2, 2), Signature(0, 3), Signature(1, 3)})
    for (int r = 1; r <= sig.dimension(); ++r) {
      auto f = random_field(rng, sig, r);
      CHECK(tensor_identity_check(f, random_point(rng, sig)).combined < 1e-9);
    }
}

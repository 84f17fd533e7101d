#include "extmax/classical.hpp"

#include <algorithm>
#include <cmath>

namespace extmax {

namespace {

const Signature kMinkowski(1, 3);

Blade blade2(int a, int b) { return Blade((1u << a) | (1u << b)); }

// spatial complement: F_23 = B_x, F_13 = -B_y, F_12 = B_z
const std::array<std::pair<Blade, double>, 3> kMagnetic = {
    std::pair{blade2(2, 3), 1.0}, std::pair{blade2(1, 3), -1.0}, std::pair{blade2(1, 2), 1.0}};

double scalar_at(const MultivectorField& f, const Point& x) { return f.evaluate(x).coefficient(Blade()).real(); }
double d_at(const MultivectorField& f, int axis, const Point& x) {
  return f.partial_derivative(axis, x).coefficient(Blade()).real();
}

MultivectorField lift(const MultivectorField& s, Blade b, double sign) {
  if (s.signature() != kMinkowski || s.grade() != 0)
    throw std::domain_error("classical components must be scalar fields on (1,3)");
  auto e = ComplexMultivector::basis(kMinkowski, b, Complex(sign));
  return map_amplitudes(s, b.grade(), [&](const ComplexMultivector& a) { return a.coefficient(Blade()) * e; });
}

MultivectorField component(const MultivectorField& f, Blade b, double sign) {
  return map_amplitudes(f, 0, [&](const ComplexMultivector& a) {
    return ComplexMultivector::scalar(kMinkowski, sign * a.coefficient(b));
  });
}

}  // namespace

double ClassicalResiduals::max_abs() const {
  double m = std::max(std::fabs(gauss), std::fabs(gauss_magnetic));
  for (int i = 0; i < 3; ++i) m = std::max({m, std::fabs(faraday[i]), std::fabs(ampere[i])});
  return m;
}

double max_abs_diff(const ClassicalResiduals& a, const ClassicalResiduals& b) {
  double m = std::max(std::fabs(a.gauss - b.gauss), std::fabs(a.gauss_magnetic - b.gauss_magnetic));
  for (int i = 0; i < 3; ++i)
    m = std::max({m, std::fabs(a.faraday[i] - b.faraday[i]), std::fabs(a.ampere[i] - b.ampere[i])});
  return m;
}

MaxwellSystem classical_pack(const ClassicalFields& cf) {
  MultivectorField f = MultivectorField::zero(kMinkowski, 2);
  MultivectorField j = lift(cf.rho, Blade(1u), 1.0);
  for (int i = 0; i < 3; ++i) {
    f = f + lift(cf.E[i], blade2(0, i + 1), 1.0);
    f = f + lift(cf.B[i], kMagnetic[i].first, kMagnetic[i].second);
    j = j + lift(cf.j[i], Blade::single(i + 1), 1.0);
  }
  return MaxwellSystem(f, j);
}

ClassicalFields classical_unpack(const MaxwellSystem& sys) {
  if (sys.signature != kMinkowski || sys.r != 2) throw std::domain_error("classical unpack needs (1,3) with r = 2");
  auto zero = MultivectorField::zero(kMinkowski, 0);
  ClassicalFields cf{{zero, zero, zero}, {zero, zero, zero}, zero, {zero, zero, zero}};
  for (int i = 0; i < 3; ++i) {
    cf.E[i] = component(sys.F, blade2(0, i + 1), 1.0);
    cf.B[i] = component(sys.F, kMagnetic[i].first, kMagnetic[i].second);
    if (sys.J) cf.j[i] = component(*sys.J, Blade::single(i + 1), 1.0);
  }
  if (sys.J) cf.rho = component(*sys.J, Blade(1u), 1.0);
  return cf;
}

Multivector classical_pack_point(const std::array<double, 3>& e, const std::array<double, 3>& b) {
  std::vector<Term<double>> t;
  for (int i = 0; i < 3; ++i) {
    t.push_back({blade2(0, i + 1), e[i]});
    t.push_back({kMagnetic[i].first, kMagnetic[i].second * b[i]});
  }
  return Multivector(kMinkowski, 2, t);
}

void classical_unpack_point(const Multivector& f, std::array<double, 3>& e, std::array<double, 3>& b) {
  if (f.signature() != kMinkowski || f.grade() != 2) throw std::domain_error("expected a bivector in (1,3)");
  for (int i = 0; i < 3; ++i) {
    e[i] = f.coefficient(blade2(0, i + 1));
    b[i] = kMagnetic[i].second * f.coefficient(kMagnetic[i].first);
  }
}

ClassicalResiduals classical_residuals(const ClassicalFields& cf, const Point& x) {
  // axis 0 is time, axes 1..3 are x, y, z
  auto dE = [&](int c, int axis) { return d_at(cf.E[c], axis, x); };
  auto dB = [&](int c, int axis) { return d_at(cf.B[c], axis, x); };
  ClassicalResiduals r{};
  r.gauss = dE(0, 1) + dE(1, 2) + dE(2, 3) - scalar_at(cf.rho, x);
  r.gauss_magnetic = dB(0, 1) + dB(1, 2) + dB(2, 3);
  std::array<double, 3> curl_e = {dE(2, 2) - dE(1, 3), dE(0, 3) - dE(2, 1), dE(1, 1) - dE(0, 2)};
  std::array<double, 3> curl_b = {dB(2, 2) - dB(1, 3), dB(0, 3) - dB(2, 1), dB(1, 1) - dB(0, 2)};
  for (int i = 0; i < 3; ++i) {
    r.faraday[i] = curl_e[i] + dB(i, 0);
    r.ampere[i] = curl_b[i] - scalar_at(cf.j[i], x) - dE(i, 0);
  }
  return r;
}

ClassicalResiduals classical_residuals_from(const MaxwellResiduals& res) {
  const auto& in = res.inhomogeneous;
  const auto& h = res.homogeneous;
  auto tri = [](int a, int b, int c) { return Blade((1u << a) | (1u << b) | (1u << c)); };
  ClassicalResiduals r{};
  r.gauss = in.coefficient(Blade(1u)).real();
  for (int i = 0; i < 3; ++i) r.ampere[i] = in.coefficient(Blade::single(i + 1)).real();
  // d ^ F = -e_0 ^ (faraday)^H + (div B) e_123
  r.gauss_magnetic = h.coefficient(tri(1, 2, 3)).real();
  r.faraday = {-h.coefficient(tri(0, 2, 3)).real(), h.coefficient(tri(0, 1, 3)).real(),
               -h.coefficient(tri(0, 1, 2)).real()};
  return r;
}

}  // namespace extmax

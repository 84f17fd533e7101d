#include "extmax/maxwell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace extmax {

MaxwellSystem::MaxwellSystem(MultivectorField f, std::optional<MultivectorField> j)
    : signature(f.signature()), r(f.grade()), F(std::move(f)), J(std::move(j)) {
  if (r < 1 || r > signature.dimension()) throw std::domain_error("field grade must lie in [1, k+n]");
  if (J) {
    require_same(signature, J->signature());
    if (J->grade() != r - 1) throw std::domain_error("source grade must be r-1");
  }
}

MaxwellResiduals maxwell_residuals(const MaxwellSystem& sys, const Point& x) {
  auto grad = sys.F.gradient(x);
  const int d = sys.signature.dimension();
  MaxwellResiduals out{apply_del(sys.signature, grad, false, 0, d), apply_del(sys.signature, grad, true, 0, d)};
  if (sys.J) out.inhomogeneous -= sys.J->evaluate(x);
  return out;
}

ComplexMultivector charge_conservation_residual(const MaxwellSystem& sys, const Point& x) {
  if (sys.r == 1 || !sys.J) return ComplexMultivector(sys.signature, std::max(sys.r - 2, 0));
  return interior_derivative(*sys.J, x);
}

MultivectorField field_from_potential(const MultivectorField& a) { return exterior_derivative(a); }

ComplexMultivector lorenz_gauge_residual(const MultivectorField& a, const Point& x) {
  if (a.grade() == 0) return ComplexMultivector(a.signature(), 0);
  return interior_derivative(a, x);
}

ComplexMultivector wave_equation_residual(const MultivectorField& a, const MultivectorField& j, const Point& x) {
  require_same(a.signature(), j.signature());
  if (j.grade() != a.grade()) throw std::domain_error("source grade must equal the potential grade");
  double s = (a.grade() % 2) ? -1.0 : 1.0;  // (-1)^(r-1) with r = gr(A) + 1
  return Complex(s) * dalembertian(a).evaluate(x) - j.evaluate(x);
}

TransverseResiduals transverse_gauge_residuals(const MultivectorField& a, const Point& x) {
  const Signature& sig = a.signature();
  if (a.grade() == 0) return {ComplexMultivector(sig, 0), ComplexMultivector(sig, 0)};
  auto grad = a.gradient(x);
  return {apply_del(sig, grad, false, 0, sig.time_dims()),
          apply_del(sig, grad, false, sig.time_dims(), sig.dimension())};
}

ComplexMultivector harmonic_gauge_residual(const MultivectorField& g, const Point& x) {
  return interior_derivative(exterior_derivative(g), x);
}

MaxwellResiduals fourier_maxwell_residuals(const std::vector<double>& xi, const ComplexMultivector& f_hat,
                                           const std::optional<ComplexMultivector>& j_hat) {
  const Signature& sig = f_hat.signature();
  std::vector<Complex> c(xi.begin(), xi.end());
  auto v = ComplexMultivector::vector(sig, c);
  MaxwellResiduals out{Complex(0, 2.0 * std::numbers::pi) * left_interior(v, f_hat), wedge(v, f_hat)};
  if (j_hat) out.inhomogeneous -= *j_hat;
  return out;
}

SourceFreeModeReport source_free_mode_report(const std::vector<double>& xi, const ComplexMultivector& f_hat,
                                             double tol) {
  const Signature& sig = f_hat.signature();
  auto res = fourier_maxwell_residuals(xi, f_hat, std::nullopt);
  std::vector<double> v(xi);
  double xx = dot(Multivector::vector(sig, v), Multivector::vector(sig, v));
  SourceFreeModeReport rep{res.inhomogeneous.max_abs(), res.homogeneous.max_abs(), xx, false, true};
  rep.satisfies = rep.inhomogeneous <= tol && rep.homogeneous <= tol;
  double scale = f_hat.max_abs();
  double norm2 = 0;
  for (double t : xi) norm2 += t * t;
  bool null = std::fabs(xx) <= 1e-9 * std::max(norm2, 1e-300);
  rep.consistent = !(rep.satisfies && scale > tol && !null);
  return rep;
}

std::optional<std::vector<double>> null_frequency(const Signature& sig, const std::vector<double>& xi_bar, int l) {
  const int d = sig.dimension();
  if (static_cast<int>(xi_bar.size()) != d) throw std::domain_error("frequency dimension mismatch");
  if (l < 0 || l >= d) throw std::domain_error("axis out of range");
  std::vector<double> xi = xi_bar;
  xi[l] = 0.0;
  double xx = 0;
  for (int i = 0; i < d; ++i) xx += sig.metric(i) * xi[i] * xi[i];
  double chi2 = -sig.metric(l) * xx;
  if (chi2 < 0) return std::nullopt;
  xi[l] = std::sqrt(chi2);
  return xi;
}

long long dof_count(int r, int k, int n) {
  if (r < 1 || k + n < 2) throw std::domain_error("dof_count needs r >= 1 and k+n >= 2");
  return static_cast<long long>(binomial(k + n - 2, r - 1));
}

ComplexMultivector project_out(const ComplexMultivector& u, const ComplexMultivector& a) {
  if (a.grade() == 0) return a;
  Complex uu = dot(u, u);
  if (std::abs(uu) == 0) throw std::domain_error("projection needs a non-null vector");
  double s = (a.grade() % 2) ? -1.0 : 1.0;
  return (Complex(s) / uu) * left_interior(u, wedge(u, a));
}

ComplexMultivector transverse_projection(const std::vector<double>& xi, const ComplexMultivector& a) {
  const Signature& sig = a.signature();
  const int k = sig.time_dims(), d = sig.dimension();
  std::vector<Complex> t(d, 0.0), s(d, 0.0);
  bool has_t = false, has_s = false;
  for (int i = 0; i < d; ++i) {
    if (i < k) {
      t[i] = xi[i];
      has_t = has_t || xi[i] != 0.0;
    } else {
      s[i] = xi[i];
      has_s = has_s || xi[i] != 0.0;
    }
  }
  ComplexMultivector out = a;
  if (has_t) out = project_out(ComplexMultivector::vector(sig, t), out);
  if (has_s) out = project_out(ComplexMultivector::vector(sig, s), out);
  return out;
}

std::vector<Multivector> transverse_basis(const Signature& sig, const std::vector<double>& xi, int r) {
  const int g = r - 1;
  std::vector<Multivector> basis;
  BladeIndexer ix(sig.dimension(), g);
  std::vector<std::vector<double>> dense;
  for (Blade b : blades_of_grade(sig.dimension(), g)) {
    Multivector p = real_part(transverse_projection(xi, ComplexMultivector::basis(sig, b)));
    std::vector<double> v(ix.size(), 0.0);
    for (const auto& t : p.terms()) v[ix.rank(t.blade)] = t.value;
    for (const auto& q : dense) {
      double c = 0;
      for (int m = 0; m < ix.size(); ++m) c += q[m] * v[m];
      for (int m = 0; m < ix.size(); ++m) v[m] -= c * q[m];
    }
    double n = 0;
    for (double y : v) n += y * y;
    n = std::sqrt(n);
    if (n < 1e-9) continue;
    for (double& y : v) y /= n;
    dense.push_back(v);
    std::vector<Term<double>> terms;
    for (int m = 0; m < ix.size(); ++m) terms.push_back({ix.blade(m), v[m]});
    basis.emplace_back(sig, g, terms);
  }
  return basis;
}

IntegralCheck integral_maxwell_check(const MaxwellSystem& sys, const HypersurfaceBox& box, const QuadratureOptions& q) {
  require_same(sys.signature, box.signature());
  const int d = sys.signature.dimension();
  IntegralCheck out;
  if (box.dimension() == sys.r + 1) {
    Complex c(0);
    for (const auto& face : box.boundary()) c += circulation(sys.F, face, q);
    out.circulation = c;
  }
  if (box.dimension() == d - sys.r + 1) {
    Complex c(0);
    for (const auto& face : box.boundary()) c += flux(sys.F, face, q).coefficient(Blade());
    if (sys.J) c -= flux(*sys.J, box, q).coefficient(Blade());
    out.flux = c;
  }
  if (!out.circulation && !out.flux)
    throw std::domain_error("box dimension must be r+1 or k+n-r+1 for the integral check");
  return out;
}

}  // namespace extmax

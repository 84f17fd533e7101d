#pragma once

#include <optional>
#include <vector>

#include "extmax/field.hpp"
#include "extmax/integration.hpp"

namespace extmax {

// F of grade r with an optional source J of grade r-1.
struct MaxwellSystem {
  Signature signature;
  int r;
  MultivectorField F;
  std::optional<MultivectorField> J;

  MaxwellSystem(MultivectorField f, std::optional<MultivectorField> j = std::nullopt);
};

struct MaxwellResiduals {
  ComplexMultivector inhomogeneous;  // d _| F - J
  ComplexMultivector homogeneous;    // d ^ F
};

MaxwellResiduals maxwell_residuals(const MaxwellSystem& sys, const Point& x);
// d _| J; zero scalar when r = 1.
ComplexMultivector charge_conservation_residual(const MaxwellSystem& sys, const Point& x);

MultivectorField field_from_potential(const MultivectorField& a);
ComplexMultivector lorenz_gauge_residual(const MultivectorField& a, const Point& x);
// (-1)^(r-1) (d.d) A - J with r = gr(A) + 1.
ComplexMultivector wave_equation_residual(const MultivectorField& a, const MultivectorField& j, const Point& x);

struct TransverseResiduals {
  ComplexMultivector time_part;   // d_t _| A
  ComplexMultivector space_part;  // d_s _| A
};
TransverseResiduals transverse_gauge_residuals(const MultivectorField& a, const Point& x);
ComplexMultivector harmonic_gauge_residual(const MultivectorField& g, const Point& x);

// Plane-wave form: j 2 pi xi _| Fhat - Jhat and xi ^ Fhat.
MaxwellResiduals fourier_maxwell_residuals(const std::vector<double>& xi, const ComplexMultivector& f_hat,
                                           const std::optional<ComplexMultivector>& j_hat);

struct SourceFreeModeReport {
  double inhomogeneous;
  double homogeneous;
  double xi_dot_xi;
  bool satisfies;    // both residuals within tol
  bool consistent;   // a nonzero amplitude may only satisfy both on the null cone
};
SourceFreeModeReport source_free_mode_report(const std::vector<double>& xi, const ComplexMultivector& f_hat,
                                             double tol = 1e-12);

// Completes xi_bar (xi_l ignored) to the + null frequency along axis l, if real.
std::optional<std::vector<double>> null_frequency(const Signature& sig, const std::vector<double>& xi_bar, int l);

// C(k+n-2, r-1).
long long dof_count(int r, int k, int n);

// Projection onto amplitudes with u _| a = 0 for a non-null vector u.
ComplexMultivector project_out(const ComplexMultivector& u, const ComplexMultivector& a);
// Transverse projection: removes the time part and then the space part of xi.
ComplexMultivector transverse_projection(const std::vector<double>& xi, const ComplexMultivector& a);
// Orthonormal-ish basis of transverse amplitudes of grade r-1 for null xi.
std::vector<Multivector> transverse_basis(const Signature& sig, const std::vector<double>& xi, int r);

struct IntegralCheck {
  std::optional<Complex> circulation;  // boundary circulation of F over a (r+1)-box
  std::optional<Complex> flux;         // boundary flux of F minus the flux of J over a (k+n-r+1)-box
};
IntegralCheck integral_maxwell_check(const MaxwellSystem& sys, const HypersurfaceBox& box,
                                     const QuadratureOptions& q = {});

}  // namespace extmax

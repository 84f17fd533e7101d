#pragma once

#include <optional>
#include <vector>

#include "extmax/bitensor.hpp"
#include "extmax/field.hpp"
#include "extmax/integration.hpp"

namespace extmax {

// f = J _| F
Multivector lorentz_force(const Multivector& f, const Multivector& j);

// T = -(F odot F + F owedge F)
Bitensor stress_tensor_def(const Multivector& f);
// Closed-form components.
Bitensor stress_tensor_explicit(const Multivector& f);
// Bilinear form of the closed-form components at ordered (i, j); T_ij = explicit_entry(F, F, i, j).
double explicit_entry(const Multivector& f, const Multivector& g, int i, int j);

// sum_i Delta_ii T_ii
double trace(const Bitensor& t);
// ((-1)^(r+1) / 2) (k+n-2r) F.F
double trace_formula(const Multivector& f);

// d _| T at x, exact via the product rule on analytic partials of F.
Multivector stress_divergence(const MultivectorField& f, const Point& x);
// Same, by central differences of the closed-form tensor with step h.
Multivector stress_divergence_fd(const MultivectorField& f, const Point& x, double h = 1e-5);
BitensorField stress_tensor_field(const MultivectorField& f);

// f + d _| T
Multivector conservation_residual(const MultivectorField& f, const MultivectorField& j, const Point& x);

struct TensorIdentityResiduals {
  double odot;    // |d _| (F odot F) - (d _| F) _| F|
  double owedge;  // |d _| (F owedge F) - (d ^ F) |_ F|
  double combined;  // both together, i.e. |d _| T + (d _| F) _| F + (d ^ F) |_ F|
};
TensorIdentityResiduals tensor_identity_check(const MultivectorField& f, const Point& x);

struct SliceOptions {
  QuadratureOptions quadrature{8, 8};
  // Integration box per axis (entries for l ignored); derived from envelopes when empty.
  std::vector<Interval> bounds;
  double envelope_threshold = 1e-12;
};

// sum_i e_i int dx_{l^c} sigma(l, l^c) T_il on the slice x_l = const.
Multivector flux_T_direct(const MultivectorField& f, int l, double x_l, const SliceOptions& opts = {});

}  // namespace extmax

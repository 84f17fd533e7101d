#pragma once

#include <functional>
#include <vector>

#include "extmax/bitensor.hpp"
#include "extmax/field.hpp"
#include "extmax/quadrature.hpp"

namespace extmax {

// Axis-aligned box spanning `free_axes`, other coordinates fixed by `anchor`.
// The element is orientation * dx_S e_S with S the sorted free axes.
class HypersurfaceBox {
 public:
  HypersurfaceBox(Signature sig, std::vector<int> free_axes, std::vector<Interval> intervals, Point anchor,
                  int orientation = 1);

  const Signature& signature() const { return sig_; }
  int dimension() const { return static_cast<int>(axes_.size()); }
  const std::vector<int>& free_axes() const { return axes_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const Point& anchor() const { return anchor_; }
  int orientation() const { return orientation_; }
  Blade blade() const { return blade_; }

  // Oriented faces: the face at the upper end of axis a has outward normal e_a.
  std::vector<HypersurfaceBox> boundary() const;

  // d^l x^{H^-1} per unit measure: a multivector of grade k+n-l.
  Multivector inv_hodge_element() const;

  // Tensor-product quadrature; f receives each node and its weight.
  void for_each_node(const QuadratureOptions& q, const std::function<void(const Point&, double)>& f) const;

 private:
  Signature sig_;
  std::vector<int> axes_;
  std::vector<Interval> intervals_;
  Point anchor_;
  int orientation_;
  Blade blade_;
};

// Generic integrand routes.
using PointMultivector = std::function<ComplexMultivector(const Point&)>;

Complex circulation(const PointMultivector& f, int grade, const HypersurfaceBox& box, const QuadratureOptions& q = {});
ComplexMultivector flux(const PointMultivector& f, int grade, const HypersurfaceBox& box, const QuadratureOptions& q = {});

Complex circulation(const MultivectorField& f, const HypersurfaceBox& box, const QuadratureOptions& q = {});
// Same integral evaluated through d^m x |_ f instead of the dot product.
Complex circulation_via_interior(const MultivectorField& f, const HypersurfaceBox& box, const QuadratureOptions& q = {});
ComplexMultivector flux(const MultivectorField& f, const HypersurfaceBox& box, const QuadratureOptions& q = {});

struct StokesReport {
  ComplexMultivector boundary;
  ComplexMultivector interior;
  double residual;      // max |boundary - interior|
  double relative;      // residual / max(|boundary|, |interior|, 1e-300)
};

StokesReport stokes_circulation_check(const MultivectorField& f, const HypersurfaceBox& volume,
                                      const QuadratureOptions& q = {});
StokesReport stokes_flux_check(const MultivectorField& f, const HypersurfaceBox& volume,
                               const QuadratureOptions& q = {});

// Real bitensor field with an interior derivative sum_ij d_j T_ij e_i.
class BitensorField {
 public:
  using Eval = std::function<Bitensor(const Point&)>;
  using Div = std::function<Multivector(const Point&)>;

  BitensorField(Signature sig, Eval eval, Div divergence)
      : sig_(sig), eval_(std::move(eval)), div_(std::move(divergence)) {}

  // Components T_ij (i <= j, row-major upper triangle) given as scalar fields.
  static BitensorField from_components(Signature sig, std::vector<MultivectorField> upper);

  const Signature& signature() const { return sig_; }
  Bitensor evaluate(const Point& x) const { return eval_(x); }
  Multivector interior_derivative(const Point& x) const { return div_(x); }

 private:
  Signature sig_;
  Eval eval_;
  Div div_;
};

// Boundary flux of T against the volume integral of its divergence (full-dimensional box).
StokesReport bitensor_stokes_check(const BitensorField& t, const HypersurfaceBox& volume,
                                   const QuadratureOptions& q = {});

// Product rule d.(v _| w) = (d ^ v).w + (-1)^gr(v) (d _| w).v at x.
double product_rule_check(const MultivectorField& v, const MultivectorField& w, const Point& x);

}  // namespace extmax

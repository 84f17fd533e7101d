#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "extmax/multivector.hpp"
#include "extmax/quadrature.hpp"

namespace extmax {

using Point = std::vector<double>;

struct GaussianEnvelope {
  double width = 1.0;
  std::vector<double> center;  // empty means the origin
};

// x^powers * exp(j (2 pi xi.x + phase)) * exp(-|x - c|^2 / (2 w^2)), with the
// metric dot product in the phase.
struct ScalarAtom {
  std::vector<int> powers;  // empty means constant
  std::vector<double> xi;   // empty means no oscillation
  double phase = 0.0;
  std::optional<GaussianEnvelope> envelope;

  friend bool operator==(const ScalarAtom& a, const ScalarAtom& b);
};

// amplitude * atom, or Re(amplitude * atom) when real_part is set.
struct FieldTerm {
  ComplexMultivector amplitude;
  ScalarAtom atom;
  bool real_part = true;
};

// Regular lattice, last axis varying fastest.
struct GridSamples {
  std::vector<double> origin;
  std::vector<double> spacing;
  std::vector<int> shape;
  std::vector<ComplexMultivector> values;
};

// Homogeneous multivector field on R^(k+n), backed by analytic terms or a lattice.
class MultivectorField {
 public:
  static MultivectorField analytic(Signature sig, int grade, std::vector<FieldTerm> terms);
  static MultivectorField grid(Signature sig, int grade, GridSamples samples);
  static MultivectorField zero(Signature sig, int grade) { return analytic(sig, grade, {}); }
  static MultivectorField constant(const ComplexMultivector& value);

  const Signature& signature() const { return sig_; }
  int grade() const { return grade_; }
  bool is_analytic() const { return !grid_; }
  bool is_real() const;
  const std::vector<FieldTerm>& terms() const;
  const GridSamples& grid_samples() const;

  ComplexMultivector evaluate(std::span<const double> x) const;
  Multivector evaluate_real(std::span<const double> x) const;
  // All first partials at x (central differences on the lattice backend).
  std::vector<ComplexMultivector> gradient(std::span<const double> x) const;
  ComplexMultivector partial_derivative(int axis, std::span<const double> x) const;

  // Per-axis box outside which every envelope is below `threshold`; empty
  // when some term does not decay.
  std::optional<std::vector<Interval>> decay_bounds(double threshold = 1e-12) const;

  friend MultivectorField operator+(const MultivectorField& a, const MultivectorField& b);
  friend MultivectorField operator*(Complex s, const MultivectorField& f);

 private:
  struct Compiled;
  MultivectorField(Signature sig, int grade) : sig_(sig), grade_(grade) {}
  void check_point(std::span<const double> x) const;
  ComplexMultivector grid_value(std::span<const double> x) const;

  Signature sig_;
  int grade_;
  std::vector<FieldTerm> terms_;
  std::shared_ptr<const Compiled> compiled_;
  std::shared_ptr<const GridSamples> grid_;
};

// Apply a linear map to every amplitude (analytic backend only).
MultivectorField map_amplitudes(const MultivectorField& f, int new_grade,
                                const std::function<ComplexMultivector(const ComplexMultivector&)>& op);

// Symbolic derivatives (analytic backend).
MultivectorField partial(const MultivectorField& f, int axis);
MultivectorField exterior_derivative(const MultivectorField& f);
MultivectorField interior_derivative(const MultivectorField& f);
MultivectorField dalembertian(const MultivectorField& f);
MultivectorField time_interior_derivative(const MultivectorField& f);
MultivectorField space_interior_derivative(const MultivectorField& f);

// Pointwise derivatives (both backends).
ComplexMultivector exterior_derivative(const MultivectorField& f, std::span<const double> x);
ComplexMultivector interior_derivative(const MultivectorField& f, std::span<const double> x);

// Samples f on a lattice, producing a lattice-backed field.
MultivectorField sample_to_grid(const MultivectorField& f, const Point& origin, const Point& spacing,
                                const std::vector<int>& shape);

// d (sum_i Delta_ii e_i op dF/dx_i) helpers shared by field and pointwise routes.
ComplexMultivector apply_del(const Signature& sig, const std::vector<ComplexMultivector>& grad, bool exterior,
                             int axis_lo, int axis_hi);

}  // namespace extmax

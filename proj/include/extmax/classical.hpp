#pragma once

#include <array>

#include "extmax/maxwell.hpp"

namespace extmax {

// Classical fields on (1,3) spacetime; each component is a scalar field.
struct ClassicalFields {
  std::array<MultivectorField, 3> E;
  std::array<MultivectorField, 3> B;
  MultivectorField rho;
  std::array<MultivectorField, 3> j;
};

// Residuals of the four vector equations.
struct ClassicalResiduals {
  double gauss;                    // div E - rho
  std::array<double, 3> faraday;   // curl E + dB/dt
  double gauss_magnetic;           // div B
  std::array<double, 3> ampere;    // curl B - j - dE/dt

  double max_abs() const;
  friend double max_abs_diff(const ClassicalResiduals& a, const ClassicalResiduals& b);
};

// F = e_0 ^ E + B^H (spatial complement), J = rho e_0 + j.
MaxwellSystem classical_pack(const ClassicalFields& cf);
ClassicalFields classical_unpack(const MaxwellSystem& sys);

Multivector classical_pack_point(const std::array<double, 3>& e, const std::array<double, 3>& b);
void classical_unpack_point(const Multivector& f, std::array<double, 3>& e, std::array<double, 3>& b);

// Vector-calculus residuals from scalar partial derivatives.
ClassicalResiduals classical_residuals(const ClassicalFields& cf, const Point& x);
// The same residuals read off the multivector equations.
ClassicalResiduals classical_residuals_from(const MaxwellResiduals& res);

}  // namespace extmax

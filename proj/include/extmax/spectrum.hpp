#pragma once

#include <optional>
#include <vector>

#include "extmax/field.hpp"
#include "extmax/quadrature.hpp"

namespace extmax {

// Gaussian bump exp(-|xi_bar - center|^2 / (2 width^2)) times an amplitude,
// optionally made transverse at every on-cone frequency.
struct SpectralBump {
  std::vector<double> center;  // length k+n, entry l ignored
  double width = 0.1;
  ComplexMultivector amplitude;
  bool transverse = true;
};

// Potential amplitude Ahat on the + sheet of the null cone, parameterized by xi_{l^c}.
class OnConeSpectrum {
 public:
  OnConeSpectrum(Signature sig, int l, std::vector<SpectralBump> bumps);

  const Signature& signature() const { return sig_; }
  int axis() const { return l_; }
  int potential_grade() const { return grade_; }

  // Frequency box covering every bump out to `radius` widths (entry l is [0, 0]).
  std::vector<Interval> support(double radius = 6.0) const;
  std::optional<std::vector<double>> xi_plus(const std::vector<double>& xi_bar) const;
  ComplexMultivector amplitude(const std::vector<double>& xi_plus) const;

  // A(x) = Re int dxi_{l^c} (1/chi) exp(j 2 pi xi_+ . x) Ahat(xi_+), by quadrature in frequency.
  MultivectorField synthesize_potential(const QuadratureOptions& q, double radius = 6.0) const;

 private:
  Signature sig_;
  int l_;
  int grade_;
  std::vector<SpectralBump> bumps_;
};

struct FourierFluxOptions {
  QuadratureOptions quadrature{16, 4};
  double support_radius = 6.0;
  double chi_min = 1e-8;
  double gauge_tol = 1e-9;   // relative to max |Ahat|
  double vanish_tol = 1e-9;  // |Ahat| allowed where chi < chi_min, relative
};

// (-1)^r 2 pi^2 sigma(l, l^c) int dxi_{l^c} (xi_+ / xi_{+,l}) |Ahat(xi_+)|^2.
Multivector flux_T_fourier(const OnConeSpectrum& spectrum, const FourierFluxOptions& opts = {});

// |a|^2 = sum_I a_I conj(a_I) Delta_II
double metric_norm2(const ComplexMultivector& a);

}  // namespace extmax

#pragma once

#include <random>

#include "extmax/classical.hpp"
#include "extmax/field.hpp"
#include "extmax/multivector.hpp"
#include "extmax/quadrature.hpp"

namespace extmax {

// Seeded source for all randomized sampling. Draws are made one at a time in a
// fixed order so a seed pins every generated object.
class Rng {
 public:
  explicit Rng(unsigned long long seed) : engine_(seed) {}
  double uniform(double lo = -1.0, double hi = 1.0);
  int integer(int lo, int hi);  // inclusive
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

Multivector random_multivector(Rng& rng, const Signature& sig, int grade);
ExactMultivector random_exact_multivector(Rng& rng, const Signature& sig, int grade, int range = 5);
Point random_point(Rng& rng, const std::vector<Interval>& box);
Point random_point(Rng& rng, const Signature& sig, double half_width = 1.0);

struct RandomFieldOptions {
  int modes = 2;
  int polynomials = 1;
  int max_power = 2;
  double max_frequency = 0.6;
  bool envelope = false;
  double envelope_width = 1.5;
};

// Real analytic field: cos modes with complex amplitudes plus polynomial terms.
MultivectorField random_field(Rng& rng, const Signature& sig, int grade, const RandomFieldOptions& opts = {});

// Potential of a source-free plane-wave superposition: null frequencies along a
// time axis and transverse amplitudes. Requires k >= 1.
MultivectorField random_vacuum_potential(Rng& rng, const Signature& sig, int r, int modes = 2,
                                         double max_frequency = 0.8);

ClassicalFields random_classical(Rng& rng, const RandomFieldOptions& opts = {});

}  // namespace extmax

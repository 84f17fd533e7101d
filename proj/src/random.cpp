#include "extmax/random.hpp"

#include <stdexcept>

#include "extmax/maxwell.hpp"

namespace extmax {

double Rng::uniform(double lo, double hi) {
  // std::uniform_real_distribution is implementation-defined; map raw bits directly
  // so reports stay identical across standard libraries.
  double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int Rng::integer(int lo, int hi) {
  unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Multivector random_multivector(Rng& rng, const Signature& sig, int grade) {
  std::vector<Term<double>> terms;
  for (Blade b : blades_of_grade(sig.dimension(), grade)) terms.push_back({b, rng.uniform()});
  return Multivector(sig, grade, terms);
}

ExactMultivector random_exact_multivector(Rng& rng, const Signature& sig, int grade, int range) {
  std::vector<Term<long long>> terms;
  for (Blade b : blades_of_grade(sig.dimension(), grade)) terms.push_back({b, rng.integer(-range, range)});
  return ExactMultivector(sig, grade, terms);
}

Point random_point(Rng& rng, const std::vector<Interval>& box) {
  Point x;
  for (const auto& iv : box) x.push_back(rng.uniform(iv.lo, iv.hi));
  return x;
}

Point random_point(Rng& rng, const Signature& sig, double half_width) {
  return random_point(rng, std::vector<Interval>(sig.dimension(), Interval{-half_width, half_width}));
}

namespace {

ComplexMultivector random_complex(Rng& rng, const Signature& sig, int grade) {
  std::vector<Term<Complex>> terms;
  for (Blade b : blades_of_grade(sig.dimension(), grade)) {
    double re = rng.uniform();
    double im = rng.uniform();
    terms.push_back({b, Complex(re, im)});
  }
  return ComplexMultivector(sig, grade, terms);
}

}  // namespace

MultivectorField random_field(Rng& rng, const Signature& sig, int grade, const RandomFieldOptions& opts) {
  const int d = sig.dimension();
  std::vector<FieldTerm> terms;
  for (int m = 0; m < opts.modes; ++m) {
    FieldTerm t{random_complex(rng, sig, grade), ScalarAtom{}, true};
    for (int i = 0; i < d; ++i) t.atom.xi.push_back(rng.uniform(-opts.max_frequency, opts.max_frequency));
    t.atom.phase = rng.uniform(0.0, 6.283185307179586);
    if (opts.envelope) {
      GaussianEnvelope env{opts.envelope_width, {}};
      for (int i = 0; i < d; ++i) env.center.push_back(rng.uniform(-0.3, 0.3));
      t.atom.envelope = env;
    }
    terms.push_back(std::move(t));
  }
  for (int p = 0; p < opts.polynomials; ++p) {
    FieldTerm t{to_complex(random_multivector(rng, sig, grade)), ScalarAtom{}, true};
    for (int i = 0; i < d; ++i) t.atom.powers.push_back(rng.integer(0, opts.max_power));
    terms.push_back(std::move(t));
  }
  return MultivectorField::analytic(sig, grade, std::move(terms));
}

MultivectorField random_vacuum_potential(Rng& rng, const Signature& sig, int r, int modes, double max_frequency) {
  if (sig.time_dims() < 1) throw std::domain_error("vacuum waves need at least one time axis");
  if (r < 1 || r > sig.dimension()) throw std::domain_error("field grade out of range");
  const int d = sig.dimension();
  std::vector<FieldTerm> terms;
  for (int m = 0; m < modes; ++m) {
    std::optional<std::vector<double>> xi;
    while (!xi) {
      std::vector<double> bar(d, 0.0);
      for (int i = 1; i < d; ++i) bar[i] = rng.uniform(-max_frequency, max_frequency);
      xi = null_frequency(sig, bar, 0);
      if (xi && (*xi)[0] < 0.05) xi.reset();
    }
    ComplexMultivector a = transverse_projection(*xi, random_complex(rng, sig, r - 1));
    ScalarAtom atom;
    atom.xi = *xi;
    atom.phase = rng.uniform(0.0, 6.283185307179586);
    terms.push_back({a, atom, true});
  }
  return MultivectorField::analytic(sig, r - 1, std::move(terms));
}

ClassicalFields random_classical(Rng& rng, const RandomFieldOptions& opts) {
  const Signature sig(1, 3);
  auto scalar = [&] { return random_field(rng, sig, 0, opts); };
  ClassicalFields cf{{scalar(), scalar(), scalar()}, {scalar(), scalar(), scalar()}, scalar(),
                     {scalar(), scalar(), scalar()}};
  return cf;
}

}  // namespace extmax

#include "extmax/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "extmax/integration.hpp"
#include "extmax/maxwell.hpp"

namespace extmax {

OnConeSpectrum::OnConeSpectrum(Signature sig, int l, std::vector<SpectralBump> bumps)
    : sig_(sig), l_(l), grade_(0), bumps_(std::move(bumps)) {
  const int d = sig.dimension();
  if (l < 0 || l >= d) throw std::domain_error("spectral axis out of range");
  if (bumps_.empty()) throw std::domain_error("spectrum needs at least one bump");
  grade_ = bumps_.front().amplitude.grade();
  for (auto& b : bumps_) {
    require_same(sig, b.amplitude.signature());
    if (b.amplitude.grade() != grade_) throw std::domain_error("all bump amplitudes need the same grade");
    if (static_cast<int>(b.center.size()) != d) throw std::domain_error("bump center dimension mismatch");
    if (!(b.width > 0)) throw std::domain_error("bump width must be positive");
    b.center[l] = 0.0;
  }
}

std::vector<Interval> OnConeSpectrum::support(double radius) const {
  const int d = sig_.dimension();
  std::vector<Interval> box(d, Interval{1e300, -1e300});
  for (const auto& b : bumps_)
    for (int i = 0; i < d; ++i) {
      box[i].lo = std::min(box[i].lo, b.center[i] - radius * b.width);
      box[i].hi = std::max(box[i].hi, b.center[i] + radius * b.width);
    }
  box[l_] = {0.0, 0.0};
  return box;
}

std::optional<std::vector<double>> OnConeSpectrum::xi_plus(const std::vector<double>& xi_bar) const {
  return null_frequency(sig_, xi_bar, l_);
}

ComplexMultivector OnConeSpectrum::amplitude(const std::vector<double>& xi) const {
  const int d = sig_.dimension();
  ComplexMultivector out(sig_, grade_);
  for (const auto& b : bumps_) {
    double s = 0;
    for (int i = 0; i < d; ++i)
      if (i != l_) s += (xi[i] - b.center[i]) * (xi[i] - b.center[i]);
    double g = std::exp(-s / (2.0 * b.width * b.width));
    if (g == 0.0) continue;
    out += Complex(g) * (b.transverse ? transverse_projection(xi, b.amplitude) : b.amplitude);
  }
  return out;
}

namespace {

// Tensor-product rule over the l^c axes of the support box.
void for_each_frequency(const OnConeSpectrum& sp, const QuadratureOptions& q, double radius,
                        const std::function<void(const std::vector<double>&, double)>& f) {
  const Signature& sig = sp.signature();
  const int d = sig.dimension();
  auto box = sp.support(radius);
  std::vector<int> axes;
  std::vector<Interval> ivs;
  for (int i = 0; i < d; ++i)
    if (i != sp.axis()) {
      axes.push_back(i);
      ivs.push_back(box[i]);
    }
  if (axes.empty()) {
    f(Point(d, 0.0), 1.0);
    return;
  }
  HypersurfaceBox region(sig, axes, ivs, Point(d, 0.0));
  region.for_each_node(q, f);
}

}  // namespace

MultivectorField OnConeSpectrum::synthesize_potential(const QuadratureOptions& q, double radius) const {
  std::vector<FieldTerm> terms;
  for_each_frequency(*this, q, radius, [&](const std::vector<double>& xi_bar, double w) {
    auto xi = xi_plus(xi_bar);
    if (!xi) return;
    double chi = (*xi)[l_];
    if (chi < 1e-8) return;
    ComplexMultivector a = amplitude(*xi);
    if (a.is_zero()) return;
    ScalarAtom atom;
    atom.xi = *xi;
    terms.push_back({Complex(w / chi) * a, atom, true});
  });
  return MultivectorField::analytic(sig_, grade_, std::move(terms));
}

double metric_norm2(const ComplexMultivector& a) {
  double s = 0;
  for (const auto& t : a.terms()) s += std::norm(t.value) * metric_sign(t.blade, a.signature());
  return s;
}

Multivector flux_T_fourier(const OnConeSpectrum& sp, const FourierFluxOptions& opts) {
  const Signature& sig = sp.signature();
  const int d = sig.dimension();
  const int l = sp.axis();
  const int r = sp.potential_grade() + 1;
  const Blade bl = Blade::single(l);
  const double s = sigma(bl, Blade(sig.full_mask()).minus(bl));
  const double pre = ((r % 2) ? -1.0 : 1.0) * 2.0 * std::numbers::pi * std::numbers::pi * s;

  // first pass: scale for relative tolerances
  double scale = 0;
  for_each_frequency(sp, opts.quadrature, opts.support_radius, [&](const std::vector<double>& xb, double) {
    if (auto xi = sp.xi_plus(xb)) scale = std::max(scale, sp.amplitude(*xi).max_abs());
  });
  if (scale == 0.0) return Multivector(sig, 1);

  std::vector<double> acc(d, 0.0);
  for_each_frequency(sp, opts.quadrature, opts.support_radius, [&](const std::vector<double>& xb, double w) {
    auto xi = sp.xi_plus(xb);
    if (!xi) return;
    double chi = (*xi)[l];
    ComplexMultivector a = sp.amplitude(*xi);
    if (chi < opts.chi_min) {
      if (a.max_abs() > opts.vanish_tol * scale)
        throw std::domain_error("amplitude does not vanish near chi = 0");
      return;
    }
    if (a.grade() > 0) {
      std::vector<Complex> c(xi->begin(), xi->end());
      double gauge = left_interior(ComplexMultivector::vector(sig, c), a).max_abs();
      if (gauge > opts.gauge_tol * scale * std::max(1.0, chi))
        throw std::domain_error("amplitude violates the Lorenz condition xi_+ _| Ahat = 0 (residual " +
                                std::to_string(gauge) + ")");
    }
    double n2 = metric_norm2(a);
    for (int i = 0; i < d; ++i) acc[i] += w * ((*xi)[i] / chi) * n2;
  });
  for (double& v : acc) v *= pre;
  return Multivector::vector(sig, acc);
}

}  // namespace extmax

#include "extmax/energy_momentum.hpp"

#include <cmath>
#include <stdexcept>

namespace extmax {

namespace {

void require_real_grade(const Multivector& f) {
  if (f.grade() < 1 || f.grade() > f.signature().dimension())
    throw std::domain_error("stress tensor needs 1 <= gr(F) <= k+n");
}

std::vector<Multivector> real_gradient(const MultivectorField& f, const Point& x) {
  if (!f.is_real()) throw std::domain_error("energy-momentum routes need a real field");
  std::vector<Multivector> out;
  for (const auto& g : f.gradient(x)) out.push_back(real_part(g));
  return out;
}

}  // namespace

Multivector lorentz_force(const Multivector& f, const Multivector& j) {
  if (j.grade() + 1 != f.grade()) throw std::domain_error("Lorentz force needs gr(J) = gr(F) - 1");
  return left_interior(j, f);
}

Bitensor stress_tensor_def(const Multivector& f) {
  require_real_grade(f);
  return -1.0 * (odot(f, f) + owedge(f, f));
}

double explicit_entry(const Multivector& f, const Multivector& g, int i, int j) {
  require_same(f.signature(), g.signature());
  const Signature& sig = f.signature();
  const int r = f.grade();
  if (i == j) {
    double in = 0, out = 0;
    for (const auto& t : f.terms()) {
      double v = t.value * g.coefficient(t.blade) * metric_sign(t.blade, sig);
      (t.blade.contains(i) ? in : out) += v;
    }
    return 0.5 * ((r % 2) ? -1.0 : 1.0) * sig.metric(i) * (in - out);
  }
  const Blade bi = Blade::single(i), bj = Blade::single(j);
  double acc = 0;
  for (const auto& t : f.terms()) {
    if (!t.blade.contains(i) || t.blade.contains(j)) continue;
    Blade l = t.blade.minus(bi);
    double gv = g.coefficient(l | bj);
    if (gv == 0.0) continue;
    acc += sigma(l, bi) * sigma(bj, l) * t.value * gv * metric_sign(l, sig);
  }
  return -acc;
}

Bitensor stress_tensor_explicit(const Multivector& f) {
  require_real_grade(f);
  return Bitensor(f.signature(), [&](int i, int j) { return explicit_entry(f, f, i, j); });
}

double trace(const Bitensor& t) {
  double s = 0;
  for (int i = 0; i < t.dimension(); ++i) s += t.signature().metric(i) * t(i, i);
  return s;
}

double trace_formula(const Multivector& f) {
  const int r = f.grade(), d = f.signature().dimension();
  return 0.5 * ((r % 2) ? 1.0 : -1.0) * (d - 2 * r) * dot(f, f);
}

Multivector stress_divergence(const MultivectorField& f, const Point& x) {
  const Signature& sig = f.signature();
  const int d = sig.dimension();
  Multivector fx = f.evaluate_real(x);
  auto grad = real_gradient(f, x);
  std::vector<double> out(d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out[i] += explicit_entry(grad[j], fx, i, j) + explicit_entry(fx, grad[j], i, j);
  return Multivector::vector(sig, out);
}

Multivector stress_divergence_fd(const MultivectorField& f, const Point& x, double h) {
  const Signature& sig = f.signature();
  const int d = sig.dimension();
  std::vector<double> out(d, 0.0);
  for (int j = 0; j < d; ++j) {
    Point xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    Bitensor tp = stress_tensor_explicit(f.evaluate_real(xp));
    Bitensor tm = stress_tensor_explicit(f.evaluate_real(xm));
    for (int i = 0; i < d; ++i) out[i] += (tp(i, j) - tm(i, j)) / (2.0 * h);
  }
  return Multivector::vector(sig, out);
}

BitensorField stress_tensor_field(const MultivectorField& f) {
  return BitensorField(
      f.signature(), [f](const Point& x) { return stress_tensor_explicit(f.evaluate_real(x)); },
      [f](const Point& x) { return stress_divergence(f, x); });
}

Multivector conservation_residual(const MultivectorField& f, const MultivectorField& j, const Point& x) {
  return lorentz_force(f.evaluate_real(x), j.evaluate_real(x)) + stress_divergence(f, x);
}

TensorIdentityResiduals tensor_identity_check(const MultivectorField& f, const Point& x) {
  const Signature& sig = f.signature();
  const int d = sig.dimension();
  Multivector fx = f.evaluate_real(x);
  auto grad = real_gradient(f, x);
  std::vector<double> dodot(d, 0.0), dowedge(d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      dodot[i] += odot_entry(grad[j], fx, i, j) + odot_entry(fx, grad[j], i, j);
      dowedge[i] += owedge_entry(grad[j], fx, i, j) + owedge_entry(fx, grad[j], i, j);
    }
  // divergence and curl of F from the same partials
  Multivector div(sig, f.grade() - 1), curl(sig, f.grade() + 1);
  for (int i = 0; i < d; ++i) {
    auto ei = Multivector::basis(sig, Blade::single(i), sig.metric(i));
    div += left_interior(ei, grad[i]);
    curl += wedge(ei, grad[i]);
  }
  Multivector a = Multivector::vector(sig, dodot) - left_interior(div, fx);
  Multivector b = Multivector::vector(sig, dowedge) - right_interior(curl, fx);
  return {a.max_abs(), b.max_abs(), (a + b).max_abs()};
}

Multivector flux_T_direct(const MultivectorField& f, int l, double x_l, const SliceOptions& opts) {
  const Signature& sig = f.signature();
  const int d = sig.dimension();
  if (l < 0 || l >= d) throw std::domain_error("slice axis out of range");
  std::vector<Interval> bounds = opts.bounds;
  if (bounds.empty()) {
    auto b = f.decay_bounds(opts.envelope_threshold);
    if (!b) throw std::domain_error("field does not decay; give explicit slice bounds");
    bounds = *b;
  }
  if (static_cast<int>(bounds.size()) != d) throw std::domain_error("slice bounds need one interval per axis");
  std::vector<int> axes;
  std::vector<Interval> ivs;
  for (int i = 0; i < d; ++i)
    if (i != l) {
      axes.push_back(i);
      ivs.push_back(bounds[i]);
    }
  Point anchor(d, 0.0);
  anchor[l] = x_l;
  const Blade bl = Blade::single(l);
  const double s = sigma(bl, Blade(sig.full_mask()).minus(bl));
  std::vector<double> acc(d, 0.0);
  auto accumulate = [&](const Point& x, double w) {
    Multivector fx = f.evaluate_real(x);
    for (int i = 0; i < d; ++i) acc[i] += w * explicit_entry(fx, fx, i, l);
  };
  if (axes.empty()) {
    accumulate(anchor, 1.0);
  } else {
    HypersurfaceBox slice(sig, axes, ivs, anchor);
    slice.for_each_node(opts.quadrature, accumulate);
  }
  for (double& v : acc) v *= s;
  return Multivector::vector(sig, acc);
}

}  // namespace extmax

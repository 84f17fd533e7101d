#include "extmax/integration.hpp"

#include <algorithm>
#include <stdexcept>

namespace extmax {

HypersurfaceBox::HypersurfaceBox(Signature sig, std::vector<int> free_axes, std::vector<Interval> intervals,
                                 Point anchor, int orientation)
    : sig_(sig), axes_(std::move(free_axes)), intervals_(std::move(intervals)), anchor_(std::move(anchor)),
      orientation_(orientation) {
  if (axes_.size() != intervals_.size()) throw std::domain_error("one interval per free axis required");
  if (static_cast<int>(anchor_.size()) != sig.dimension()) throw std::domain_error("anchor dimension mismatch");
  if (orientation != 1 && orientation != -1) throw std::domain_error("orientation must be +1 or -1");
  blade_ = Blade::from_indices(axes_);
  if (blade_.bits() & ~sig.full_mask()) throw std::domain_error("free axis out of range");
  for (const auto& iv : intervals_)
    if (!(iv.hi > iv.lo)) throw std::domain_error("empty box interval");
}

std::vector<HypersurfaceBox> HypersurfaceBox::boundary() const {
  std::vector<HypersurfaceBox> faces;
  for (std::size_t p = 0; p < axes_.size(); ++p) {
    int a = axes_[p];
    std::vector<int> axes;
    std::vector<Interval> ivs;
    for (std::size_t q = 0; q < axes_.size(); ++q)
      if (q != p) {
        axes.push_back(axes_[q]);
        ivs.push_back(intervals_[q]);
      }
    int s = sigma(Blade::single(a), blade_.minus(Blade::single(a)));
    Point lo = anchor_, hi = anchor_;
    lo[a] = intervals_[p].lo;
    hi[a] = intervals_[p].hi;
    faces.emplace_back(sig_, axes, ivs, lo, -orientation_ * s);
    faces.emplace_back(sig_, axes, ivs, hi, orientation_ * s);
  }
  return faces;
}

Multivector HypersurfaceBox::inv_hodge_element() const {
  return inv_hodge(Multivector::basis(sig_, blade_, static_cast<double>(orientation_)));
}

void HypersurfaceBox::for_each_node(const QuadratureOptions& q, const std::function<void(const Point&, double)>& f) const {
  const std::size_t m = axes_.size();
  std::vector<QuadratureRule> rules;
  for (const auto& iv : intervals_) rules.push_back(composite_rule(iv, q.points, q.panels));
  std::vector<std::size_t> idx(m, 0);
  Point x = anchor_;
  while (true) {
    double w = 1.0;
    for (std::size_t a = 0; a < m; ++a) {
      x[axes_[a]] = rules[a].nodes[idx[a]];
      w *= rules[a].weights[idx[a]];
    }
    f(x, w);
    std::size_t a = m;
    while (a > 0) {
      --a;
      if (++idx[a] < rules[a].nodes.size()) break;
      idx[a] = 0;
      if (a == 0) return;
    }
    if (m == 0) return;
  }
}

Complex circulation(const PointMultivector& f, int grade, const HypersurfaceBox& box, const QuadratureOptions& q) {
  if (grade != box.dimension()) throw std::domain_error("circulation requires gr(f) equal to the box dimension");
  const Blade s = box.blade();
  const double sign = box.orientation() * metric_sign(s, box.signature());
  Complex acc(0);
  box.for_each_node(q, [&](const Point& x, double w) { acc += w * f(x).coefficient(s); });
  return sign * acc;
}

ComplexMultivector flux(const PointMultivector& f, int grade, const HypersurfaceBox& box, const QuadratureOptions& q) {
  const Signature& sig = box.signature();
  int out = grade + box.dimension() - sig.dimension();
  if (out < 0) return ComplexMultivector(sig, 0);
  ComplexMultivector h = to_complex(box.inv_hodge_element());
  std::vector<Complex> buf;
  ComplexMultivector acc(sig, out);
  box.for_each_node(q, [&](const Point& x, double w) { acc += Complex(w) * left_interior(h, f(x)); });
  return acc;
}

namespace {

PointMultivector eval_of(const MultivectorField& f) {
  return [&f](const Point& x) { return f.evaluate(x); };
}

double rel(double res, double a, double b) { return res / std::max({a, b, 1e-300}); }

}  // namespace

Complex circulation(const MultivectorField& f, const HypersurfaceBox& box, const QuadratureOptions& q) {
  require_same(f.signature(), box.signature());
  return circulation(eval_of(f), f.grade(), box, q);
}

Complex circulation_via_interior(const MultivectorField& f, const HypersurfaceBox& box, const QuadratureOptions& q) {
  require_same(f.signature(), box.signature());
  if (f.grade() != box.dimension()) throw std::domain_error("circulation requires gr(f) equal to the box dimension");
  auto elem = ComplexMultivector::basis(box.signature(), box.blade(), Complex(box.orientation()));
  Complex acc(0);
  box.for_each_node(q, [&](const Point& x, double w) { acc += w * right_interior(elem, f.evaluate(x)).coefficient(Blade()); });
  return acc;
}

ComplexMultivector flux(const MultivectorField& f, const HypersurfaceBox& box, const QuadratureOptions& q) {
  require_same(f.signature(), box.signature());
  return flux(eval_of(f), f.grade(), box, q);
}

StokesReport stokes_circulation_check(const MultivectorField& f, const HypersurfaceBox& volume,
                                      const QuadratureOptions& q) {
  require_same(f.signature(), volume.signature());
  if (volume.dimension() != f.grade() + 1) throw std::domain_error("circulation Stokes check needs a (gr(f)+1)-box");
  const Signature& sig = f.signature();
  Complex bnd(0);
  for (const auto& face : volume.boundary()) bnd += circulation(f, face, q);
  Complex in = circulation([&f](const Point& x) { return exterior_derivative(f, x); }, f.grade() + 1, volume, q);
  StokesReport r{ComplexMultivector::scalar(sig, bnd), ComplexMultivector::scalar(sig, in), 0, 0};
  r.residual = std::abs(bnd - in);
  r.relative = rel(r.residual, std::abs(bnd), std::abs(in));
  return r;
}

StokesReport stokes_flux_check(const MultivectorField& f, const HypersurfaceBox& volume, const QuadratureOptions& q) {
  require_same(f.signature(), volume.signature());
  const Signature& sig = f.signature();
  if (volume.dimension() < 1) throw std::domain_error("flux Stokes check needs a box of dimension >= 1");
  int out = f.grade() + volume.dimension() - 1 - sig.dimension();
  StokesReport r{ComplexMultivector(sig, std::max(out, 0)), ComplexMultivector(sig, std::max(out, 0)), 0, 0};
  if (out < 0 || f.grade() == 0) return r;
  for (const auto& face : volume.boundary()) r.boundary += flux(f, face, q);
  r.interior = flux([&f](const Point& x) { return interior_derivative(f, x); }, f.grade() - 1, volume, q);
  r.residual = max_abs_diff(r.boundary, r.interior);
  r.relative = rel(r.residual, r.boundary.max_abs(), r.interior.max_abs());
  return r;
}

BitensorField BitensorField::from_components(Signature sig, std::vector<MultivectorField> upper) {
  const int d = sig.dimension();
  if (static_cast<int>(upper.size()) != d * (d + 1) / 2) throw std::domain_error("need d(d+1)/2 components");
  for (const auto& c : upper) {
    require_same(sig, c.signature());
    if (c.grade() != 0) throw std::domain_error("bitensor components must be scalar fields");
  }
  auto comps = std::make_shared<std::vector<MultivectorField>>(std::move(upper));
  auto slot = [d](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * d - i * (i - 1) / 2 + (j - i);
  };
  Eval eval = [sig, comps, slot](const Point& x) {
    return Bitensor(sig, [&](int i, int j) { return (*comps)[slot(i, j)].evaluate(x).coefficient(Blade()).real(); });
  };
  Div div = [sig, comps, slot, d](const Point& x) {
    std::vector<double> out(d, 0.0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out[i] += (*comps)[slot(i, j)].partial_derivative(j, x).coefficient(Blade()).real();
    return Multivector::vector(sig, out);
  };
  return BitensorField(sig, eval, div);
}

StokesReport bitensor_stokes_check(const BitensorField& t, const HypersurfaceBox& volume, const QuadratureOptions& q) {
  const Signature& sig = t.signature();
  require_same(sig, volume.signature());
  if (volume.dimension() != sig.dimension()) throw std::domain_error("bitensor Stokes check needs a full-dimensional box");
  Multivector bnd(sig, 1), in(sig, 1);
  for (const auto& face : volume.boundary()) {
    Multivector n = face.inv_hodge_element();
    face.for_each_node(q, [&](const Point& x, double w) { bnd += w * vec_interior_bitensor(n, t.evaluate(x)); });
  }
  const double o = volume.orientation();
  volume.for_each_node(q, [&](const Point& x, double w) { in += (o * w) * t.interior_derivative(x); });
  StokesReport r{to_complex(bnd), to_complex(in), 0, 0};
  r.residual = max_abs_diff(bnd, in);
  r.relative = rel(r.residual, bnd.max_abs(), in.max_abs());
  return r;
}

double product_rule_check(const MultivectorField& v, const MultivectorField& w, const Point& x) {
  require_same(v.signature(), w.signature());
  if (w.grade() != v.grade() + 1) throw std::domain_error("product rule needs gr(w) = gr(v) + 1");
  const Signature& sig = v.signature();
  const int d = sig.dimension();
  // d.(v _| w) by fourth-order central differences of the contracted vector
  auto contracted = [&](const Point& y) { return left_interior(v.evaluate(y), w.evaluate(y)); };
  const double h = 1e-3;
  Complex lhs(0);
  for (int i = 0; i < d; ++i) {
    auto at = [&](double s) {
      Point y = x;
      y[i] += s * h;
      return contracted(y).coefficient(Blade::single(i));
    };
    lhs += (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2)) / (12.0 * h);
  }
  auto vx = v.evaluate(x), wx = w.evaluate(x);
  Complex rhs = dot(exterior_derivative(v, x), wx) +
                Complex((v.grade() % 2) ? -1.0 : 1.0) * dot(interior_derivative(w, x), vx);
  return std::abs(lhs - rhs);
}

}  // namespace extmax

#include "extmax/field.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace extmax {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct AtomKey {
  const ScalarAtom* atom;
  bool real_part;
};

struct AtomKeyLess {
  bool operator()(const AtomKey& x, const AtomKey& y) const {
    const ScalarAtom& a = *x.atom;
    const ScalarAtom& b = *y.atom;
    if (x.real_part != y.real_part) return x.real_part < y.real_part;
    if (a.envelope.has_value() != b.envelope.has_value()) return !a.envelope.has_value();
    if (a.powers != b.powers) return a.powers < b.powers;
    if (a.xi != b.xi) return a.xi < b.xi;
    if (a.phase != b.phase) return a.phase < b.phase;
    if (!a.envelope) return false;
    if (a.envelope->width != b.envelope->width) return a.envelope->width < b.envelope->width;
    return a.envelope->center < b.envelope->center;
  }
};

ScalarAtom normalized(ScalarAtom a, int d) {
  if (a.powers.empty()) a.powers.assign(d, 0);
  if (a.xi.empty()) a.xi.assign(d, 0.0);
  if (static_cast<int>(a.powers.size()) != d || static_cast<int>(a.xi.size()) != d)
    throw std::domain_error("atom dimension mismatch");
  for (int p : a.powers)
    if (p < 0) throw std::domain_error("negative monomial power");
  if (a.envelope) {
    if (!(a.envelope->width > 0)) throw std::domain_error("envelope width must be positive");
    if (a.envelope->center.empty()) a.envelope->center.assign(d, 0.0);
    if (static_cast<int>(a.envelope->center.size()) != d) throw std::domain_error("envelope center dimension mismatch");
  }
  return a;
}

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

}  // namespace

bool operator==(const ScalarAtom& a, const ScalarAtom& b) {
  AtomKeyLess less;
  AtomKey ka{&a, false}, kb{&b, false};
  return !less(ka, kb) && !less(kb, ka);
}

struct MultivectorField::Compiled {
  struct CTerm {
    std::vector<std::pair<int, Complex>> amp;  // (rank, value)
    ScalarAtom atom;
    bool real_part;
    bool has_phase;
  };
  BladeIndexer indexer;
  std::vector<CTerm> terms;
  std::vector<int> metric;
  // lattice data (rank-major per site)
  std::vector<Complex> grid_data;

  Compiled(const Signature& sig, int grade) : indexer(sig.dimension(), std::min(grade, sig.dimension())) {
    for (int i = 0; i < sig.dimension(); ++i) metric.push_back(sig.metric(i));
  }

  Complex atom_value(const ScalarAtom& a, bool has_phase, std::span<const double> x) const {
    const std::size_t d = x.size();
    double poly = 1.0, theta = a.phase, env = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      if (a.powers[i]) poly *= ipow(x[i], a.powers[i]);
      theta += kTwoPi * metric[i] * a.xi[i] * x[i];
    }
    if (a.envelope) {
      double w2 = a.envelope->width * a.envelope->width;
      for (std::size_t i = 0; i < d; ++i) {
        double t = x[i] - a.envelope->center[i];
        env -= t * t;
      }
      poly *= std::exp(env / (2.0 * w2));
    }
    if (!has_phase) return Complex(poly, 0.0);
    return std::polar(poly, theta);
  }

  // value and partials of an atom
  void atom_gradient(const ScalarAtom& a, bool has_phase, std::span<const double> x, Complex& g,
                     std::vector<Complex>& dg) const {
    const int d = static_cast<int>(x.size());
    g = atom_value(a, has_phase, x);
    double theta = a.phase, env = 1.0;
    for (int i = 0; i < d; ++i) theta += kTwoPi * metric[i] * a.xi[i] * x[i];
    Complex wave_env = has_phase ? std::polar(1.0, theta) : Complex(1.0);
    if (a.envelope) {
      double s = 0, w2 = a.envelope->width * a.envelope->width;
      for (int i = 0; i < d; ++i) {
        double t = x[i] - a.envelope->center[i];
        s -= t * t;
      }
      env = std::exp(s / (2.0 * w2));
    }
    wave_env *= env;
    for (int i = 0; i < d; ++i) {
      Complex dlog(0.0, kTwoPi * metric[i] * a.xi[i]);
      if (a.envelope) dlog -= (x[i] - a.envelope->center[i]) / (a.envelope->width * a.envelope->width);
      Complex v = g * dlog;
      if (a.powers[i] > 0) {
        double dp = a.powers[i] * ipow(x[i], a.powers[i] - 1);
        for (int j = 0; j < d; ++j)
          if (j != i && a.powers[j]) dp *= ipow(x[j], a.powers[j]);
        v += dp * wave_env;
      }
      dg[i] = v;
    }
  }
};

MultivectorField MultivectorField::analytic(Signature sig, int grade, std::vector<FieldTerm> terms) {
  MultivectorField f(sig, grade);
  const int d = sig.dimension();
  std::vector<FieldTerm> norm;
  norm.reserve(terms.size());
  for (auto& t : terms) {
    require_same(sig, t.amplitude.signature());
    if (t.amplitude.grade() != grade) throw std::domain_error("term amplitude grade does not match field grade");
    if (t.amplitude.is_zero()) continue;
    norm.push_back({t.amplitude, normalized(std::move(t.atom), d), t.real_part});
  }
  // merge terms sharing an atom
  std::map<AtomKey, std::size_t, AtomKeyLess> seen;
  std::vector<FieldTerm> merged;
  merged.reserve(norm.size());
  for (auto& t : norm) {
    auto it = seen.find(AtomKey{&t.atom, t.real_part});
    if (it == seen.end()) {
      merged.push_back(std::move(t));
      // no reallocation: capacity was reserved above
      seen.emplace(AtomKey{&merged.back().atom, merged.back().real_part}, merged.size() - 1);
    } else {
      merged[it->second].amplitude += t.amplitude;
    }
  }
  std::erase_if(merged, [](const FieldTerm& t) { return t.amplitude.is_zero(); });
  f.terms_ = std::move(merged);
  auto c = std::make_shared<Compiled>(sig, grade);
  if (grade <= d) {
    for (const auto& t : f.terms_) {
      Compiled::CTerm ct;
      for (const auto& a : t.amplitude.terms()) ct.amp.push_back({c->indexer.rank(a.blade), a.value});
      ct.atom = t.atom;
      ct.real_part = t.real_part;
      ct.has_phase = t.atom.phase != 0.0;
      for (double v : t.atom.xi) ct.has_phase = ct.has_phase || v != 0.0;
      c->terms.push_back(std::move(ct));
    }
  }
  f.compiled_ = c;
  return f;
}

MultivectorField MultivectorField::grid(Signature sig, int grade, GridSamples samples) {
  const int d = sig.dimension();
  if (static_cast<int>(samples.origin.size()) != d || static_cast<int>(samples.spacing.size()) != d ||
      static_cast<int>(samples.shape.size()) != d)
    throw std::domain_error("grid dimension mismatch");
  std::size_t sites = 1;
  for (int i = 0; i < d; ++i) {
    if (samples.shape[i] < 2) throw std::domain_error("grid needs at least two sites per axis");
    if (!(samples.spacing[i] > 0)) throw std::domain_error("grid spacing must be positive");
    sites *= samples.shape[i];
  }
  if (samples.values.size() != sites) throw std::domain_error("grid value count does not match shape");
  MultivectorField f(sig, grade);
  auto c = std::make_shared<Compiled>(sig, grade);
  const int nb = c->indexer.size();
  c->grid_data.assign(sites * nb, Complex(0));
  for (std::size_t s = 0; s < sites; ++s) {
    const auto& v = samples.values[s];
    require_same(sig, v.signature());
    if (v.grade() != grade) throw std::domain_error("grid value grade does not match field grade");
    for (const auto& t : v.terms()) c->grid_data[s * nb + c->indexer.rank(t.blade)] = t.value;
  }
  f.compiled_ = c;
  f.grid_ = std::make_shared<const GridSamples>(std::move(samples));
  return f;
}

MultivectorField MultivectorField::constant(const ComplexMultivector& value) {
  return analytic(value.signature(), value.grade(), {{value, ScalarAtom{}, false}});
}

const std::vector<FieldTerm>& MultivectorField::terms() const {
  if (grid_) throw std::logic_error("lattice-backed field has no analytic terms");
  return terms_;
}

const GridSamples& MultivectorField::grid_samples() const {
  if (!grid_) throw std::logic_error("field is not lattice-backed");
  return *grid_;
}

bool MultivectorField::is_real() const {
  if (grid_) {
    for (const auto& v : compiled_->grid_data)
      if (v.imag() != 0.0) return false;
    return true;
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].real_part) continue;
    if (compiled_->terms[i].has_phase) return false;
    for (const auto& a : terms_[i].amplitude.terms())
      if (a.value.imag() != 0.0) return false;
  }
  return true;
}

void MultivectorField::check_point(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != sig_.dimension()) throw std::domain_error("point dimension mismatch");
}

namespace {

ComplexMultivector from_dense(const Signature& sig, int grade, const BladeIndexer& ix, const std::vector<Complex>& buf) {
  if (grade > sig.dimension()) return ComplexMultivector(sig, grade);
  std::vector<Term<Complex>> t;
  for (int r = 0; r < ix.size(); ++r)
    if (buf[r] != Complex(0)) t.push_back({ix.blade(r), buf[r]});
  return ComplexMultivector(sig, grade, t);
}

}  // namespace

ComplexMultivector MultivectorField::grid_value(std::span<const double> x) const {
  const int d = sig_.dimension();
  const GridSamples& g = *grid_;
  const int nb = compiled_->indexer.size();
  std::vector<int> base(d);
  std::vector<double> frac(d);
  for (int i = 0; i < d; ++i) {
    double u = (x[i] - g.origin[i]) / g.spacing[i];
    double eps = 1e-9;
    if (u < -eps || u > g.shape[i] - 1 + eps) throw std::domain_error("point outside the lattice");
    u = std::clamp(u, 0.0, static_cast<double>(g.shape[i] - 1));
    int b = std::min(static_cast<int>(std::floor(u)), g.shape[i] - 2);
    double fr = u - b;
    if (std::fabs(fr) < 1e-9) fr = 0.0;
    if (std::fabs(fr - 1.0) < 1e-9) fr = 1.0;
    base[i] = b;
    frac[i] = fr;
  }
  std::vector<Complex> buf(nb, Complex(0));
  for (unsigned corner = 0; corner < (1u << d); ++corner) {
    double w = 1.0;
    std::size_t site = 0;
    for (int i = 0; i < d; ++i) {
      int bit = (corner >> i) & 1;
      w *= bit ? frac[i] : 1.0 - frac[i];
      site = site * g.shape[i] + base[i] + bit;
    }
    if (w == 0.0) continue;
    for (int r = 0; r < nb; ++r) buf[r] += w * compiled_->grid_data[site * nb + r];
  }
  return from_dense(sig_, grade_, compiled_->indexer, buf);
}

ComplexMultivector MultivectorField::evaluate(std::span<const double> x) const {
  check_point(x);
  if (grid_) return grid_value(x);
  if (grade_ > sig_.dimension()) return ComplexMultivector(sig_, grade_);
  std::vector<Complex> buf(compiled_->indexer.size(), Complex(0));
  for (const auto& t : compiled_->terms) {
    Complex g = compiled_->atom_value(t.atom, t.has_phase, x);
    if (t.real_part)
      for (const auto& [r, a] : t.amp) buf[r] += (a * g).real();
    else
      for (const auto& [r, a] : t.amp) buf[r] += a * g;
  }
  return from_dense(sig_, grade_, compiled_->indexer, buf);
}

Multivector MultivectorField::evaluate_real(std::span<const double> x) const {
  if (!is_real()) throw std::domain_error("field is not real-valued");
  return real_part(evaluate(x));
}

std::vector<ComplexMultivector> MultivectorField::gradient(std::span<const double> x) const {
  check_point(x);
  const int d = sig_.dimension();
  std::vector<ComplexMultivector> out;
  if (grid_) {
    for (int i = 0; i < d; ++i) {
      Point xp(x.begin(), x.end()), xm(x.begin(), x.end());
      double h = grid_->spacing[i];
      xp[i] += h;
      xm[i] -= h;
      out.push_back((1.0 / (2.0 * h)) * (grid_value(xp) - grid_value(xm)));
    }
    return out;
  }
  if (grade_ > d) return std::vector<ComplexMultivector>(d, ComplexMultivector(sig_, grade_));
  const int nb = compiled_->indexer.size();
  std::vector<std::vector<Complex>> buf(d, std::vector<Complex>(nb, Complex(0)));
  std::vector<Complex> dg(d);
  Complex g;
  for (const auto& t : compiled_->terms) {
    compiled_->atom_gradient(t.atom, t.has_phase, x, g, dg);
    for (int i = 0; i < d; ++i) {
      if (dg[i] == Complex(0)) continue;
      if (t.real_part)
        for (const auto& [r, a] : t.amp) buf[i][r] += (a * dg[i]).real();
      else
        for (const auto& [r, a] : t.amp) buf[i][r] += a * dg[i];
    }
  }
  for (int i = 0; i < d; ++i) out.push_back(from_dense(sig_, grade_, compiled_->indexer, buf[i]));
  return out;
}

ComplexMultivector MultivectorField::partial_derivative(int axis, std::span<const double> x) const {
  if (axis < 0 || axis >= sig_.dimension()) throw std::domain_error("axis out of range");
  return gradient(x)[axis];
}

std::optional<std::vector<Interval>> MultivectorField::decay_bounds(double threshold) const {
  const int d = sig_.dimension();
  if (grid_) {
    std::vector<Interval> b;
    for (int i = 0; i < d; ++i) b.push_back({grid_->origin[i], grid_->origin[i] + grid_->spacing[i] * (grid_->shape[i] - 1)});
    return b;
  }
  if (terms_.empty()) return std::nullopt;
  double radius = std::sqrt(2.0 * std::log(1.0 / threshold));
  std::vector<Interval> box(d, Interval{1e300, -1e300});
  for (const auto& t : terms_) {
    if (!t.atom.envelope) return std::nullopt;
    for (int i = 0; i < d; ++i) {
      double c = t.atom.envelope->center[i], r = radius * t.atom.envelope->width;
      box[i].lo = std::min(box[i].lo, c - r);
      box[i].hi = std::max(box[i].hi, c + r);
    }
  }
  return box;
}

MultivectorField operator+(const MultivectorField& a, const MultivectorField& b) {
  require_same(a.sig_, b.sig_);
  if (a.grade_ != b.grade_) throw std::domain_error("cannot add fields of different grade");
  if (a.grid_ || b.grid_) throw std::logic_error("field addition needs the analytic backend");
  std::vector<FieldTerm> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return MultivectorField::analytic(a.sig_, a.grade_, std::move(t));
}

MultivectorField operator*(Complex s, const MultivectorField& f) {
  return map_amplitudes(f, f.grade(), [s](const ComplexMultivector& a) { return s * a; });
}

MultivectorField map_amplitudes(const MultivectorField& f, int new_grade,
                                const std::function<ComplexMultivector(const ComplexMultivector&)>& op) {
  std::vector<FieldTerm> out;
  for (const auto& t : f.terms()) out.push_back({op(t.amplitude), t.atom, t.real_part});
  return MultivectorField::analytic(f.signature(), new_grade, std::move(out));
}

MultivectorField partial(const MultivectorField& f, int axis) {
  const Signature& sig = f.signature();
  const int d = sig.dimension();
  if (axis < 0 || axis >= d) throw std::domain_error("axis out of range");
  std::vector<FieldTerm> out;
  for (const auto& t : f.terms()) {
    const ScalarAtom& a = t.atom;
    if (a.powers[axis] > 0) {
      ScalarAtom b = a;
      b.powers[axis] -= 1;
      out.push_back({Complex(a.powers[axis]) * t.amplitude, b, t.real_part});
    }
    if (a.xi[axis] != 0.0) out.push_back({Complex(0, kTwoPi * sig.metric(axis) * a.xi[axis]) * t.amplitude, a, t.real_part});
    if (a.envelope) {
      double w2 = a.envelope->width * a.envelope->width;
      ScalarAtom b = a;
      b.powers[axis] += 1;
      out.push_back({Complex(-1.0 / w2) * t.amplitude, b, t.real_part});
      double c = a.envelope->center[axis];
      if (c != 0.0) out.push_back({Complex(c / w2) * t.amplitude, a, t.real_part});
    }
  }
  return MultivectorField::analytic(sig, f.grade(), std::move(out));
}

namespace {

MultivectorField del_field(const MultivectorField& f, bool exterior, int lo, int hi) {
  const Signature& sig = f.signature();
  int g = exterior ? f.grade() + 1 : f.grade() - 1;
  if (g < 0) return MultivectorField::zero(sig, 0);
  MultivectorField acc = MultivectorField::zero(sig, g);
  for (int i = lo; i < hi; ++i) {
    auto ei = ComplexMultivector::basis(sig, Blade::single(i), Complex(sig.metric(i)));
    acc = acc + map_amplitudes(partial(f, i), g, [&](const ComplexMultivector& a) {
            return exterior ? wedge(ei, a) : left_interior(ei, a);
          });
  }
  return acc;
}

}  // namespace

MultivectorField exterior_derivative(const MultivectorField& f) {
  return del_field(f, true, 0, f.signature().dimension());
}
MultivectorField interior_derivative(const MultivectorField& f) {
  return del_field(f, false, 0, f.signature().dimension());
}
MultivectorField time_interior_derivative(const MultivectorField& f) {
  return del_field(f, false, 0, f.signature().time_dims());
}
MultivectorField space_interior_derivative(const MultivectorField& f) {
  return del_field(f, false, f.signature().time_dims(), f.signature().dimension());
}

MultivectorField dalembertian(const MultivectorField& f) {
  const Signature& sig = f.signature();
  MultivectorField acc = MultivectorField::zero(sig, f.grade());
  for (int i = 0; i < sig.dimension(); ++i) acc = acc + Complex(sig.metric(i)) * partial(partial(f, i), i);
  return acc;
}

ComplexMultivector apply_del(const Signature& sig, const std::vector<ComplexMultivector>& grad, bool exterior,
                             int axis_lo, int axis_hi) {
  int g = grad.at(0).grade() + (exterior ? 1 : -1);
  if (g < 0) return ComplexMultivector(sig, 0);
  ComplexMultivector acc(sig, g);
  for (int i = axis_lo; i < axis_hi; ++i) {
    auto ei = ComplexMultivector::basis(sig, Blade::single(i), Complex(sig.metric(i)));
    acc += exterior ? wedge(ei, grad[i]) : left_interior(ei, grad[i]);
  }
  return acc;
}

ComplexMultivector exterior_derivative(const MultivectorField& f, std::span<const double> x) {
  return apply_del(f.signature(), f.gradient(x), true, 0, f.signature().dimension());
}

ComplexMultivector interior_derivative(const MultivectorField& f, std::span<const double> x) {
  return apply_del(f.signature(), f.gradient(x), false, 0, f.signature().dimension());
}

MultivectorField sample_to_grid(const MultivectorField& f, const Point& origin, const Point& spacing,
                                const std::vector<int>& shape) {
  const int d = f.signature().dimension();
  GridSamples g{origin, spacing, shape, {}};
  std::size_t sites = 1;
  for (int s : shape) sites *= s;
  std::vector<int> idx(d, 0);
  for (std::size_t s = 0; s < sites; ++s) {
    Point x(d);
    for (int i = 0; i < d; ++i) x[i] = origin[i] + spacing[i] * idx[i];
    g.values.push_back(f.evaluate(x));
    for (int i = d - 1; i >= 0; --i) {
      if (++idx[i] < shape[i]) break;
      idx[i] = 0;
    }
  }
  return MultivectorField::grid(f.signature(), f.grade(), std::move(g));
}

}  // namespace extmax

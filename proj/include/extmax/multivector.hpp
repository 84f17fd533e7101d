#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "extmax/blade.hpp"
#include "extmax/signature.hpp"

namespace extmax {

using Complex = std::complex<double>;

namespace detail {

template <class S>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

template <class S>
double magnitude(const S& v) {
  if constexpr (is_complex<S>::value)
    return std::abs(v);
  else
    return std::fabs(static_cast<double>(v));
}

}  // namespace detail

// Relative prune threshold applied to floating coefficients.
inline constexpr double kPruneRelative = 1e-14;

template <class Scalar>
struct Term {
  Blade blade;
  Scalar value;
};

// Homogeneous multivector of fixed grade with sparse, lexicographically ordered terms.
template <class Scalar>
class BasicMultivector {
 public:
  using scalar_type = Scalar;
  using term_type = Term<Scalar>;

  BasicMultivector(Signature sig, int grade) : sig_(sig), grade_(grade) {
    // grades above the dimension are allowed and always zero
    if (grade < 0) throw std::domain_error("negative grade");
  }

  // Builds from (blade, value) pairs; duplicates are summed.
  BasicMultivector(Signature sig, int grade, const std::vector<term_type>& terms)
      : BasicMultivector(sig, grade) {
    std::map<Blade, Scalar, LexLess> acc;
    for (const auto& t : terms) {
      check_blade(t.blade);
      acc[t.blade] += t.value;
    }
    assign(acc);
  }

  static BasicMultivector basis(Signature sig, Blade b, Scalar c = Scalar(1)) {
    BasicMultivector m(sig, b.grade());
    m.check_blade(b);
    m.terms_.push_back({b, c});
    m.prune();
    return m;
  }
  static BasicMultivector basis(Signature sig, std::initializer_list<int> idx, Scalar c = Scalar(1)) {
    std::vector<int> v(idx);
    return basis(sig, Blade::from_indices(v), c);
  }
  static BasicMultivector scalar(Signature sig, Scalar c) { return basis(sig, Blade(), c); }
  // Vector sum_i c_i e_i.
  static BasicMultivector vector(Signature sig, const std::vector<Scalar>& c) {
    if (static_cast<int>(c.size()) != sig.dimension()) throw std::domain_error("vector length mismatch");
    std::vector<term_type> t;
    for (int i = 0; i < sig.dimension(); ++i) t.push_back({Blade::single(i), c[i]});
    return BasicMultivector(sig, 1, t);
  }

  const Signature& signature() const { return sig_; }
  int grade() const { return grade_; }
  const std::vector<term_type>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(Blade b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const term_type& t, Blade x) { return lex_less(t.blade, x); });
    if (it != terms_.end() && it->blade == b) return it->value;
    return Scalar(0);
  }
  Scalar coefficient(std::initializer_list<int> idx) const {
    std::vector<int> v(idx);
    return coefficient(Blade::from_indices(v));
  }

  double max_abs() const {
    double m = 0;
    for (const auto& t : terms_) m = std::max(m, detail::magnitude(t.value));
    return m;
  }

  BasicMultivector operator-() const {
    BasicMultivector r = *this;
    for (auto& t : r.terms_) t.value = -t.value;
    return r;
  }
  BasicMultivector& operator+=(const BasicMultivector& o) { return *this = combine(o, Scalar(1)); }
  BasicMultivector& operator-=(const BasicMultivector& o) { return *this = combine(o, Scalar(-1)); }
  friend BasicMultivector operator+(BasicMultivector a, const BasicMultivector& b) { return a += b; }
  friend BasicMultivector operator-(BasicMultivector a, const BasicMultivector& b) { return a -= b; }
  friend BasicMultivector operator*(Scalar c, BasicMultivector a) {
    for (auto& t : a.terms_) t.value *= c;
    a.prune();
    return a;
  }
  friend BasicMultivector operator*(BasicMultivector a, Scalar c) { return c * std::move(a); }

  // Exact structural equality (same signature, grade and coefficients).
  friend bool operator==(const BasicMultivector& a, const BasicMultivector& b) {
    if (!(a.sig_ == b.sig_) || a.grade_ != b.grade_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].blade == b.terms_[i].blade) || a.terms_[i].value != b.terms_[i].value) return false;
    return true;
  }

  template <class Map>
  void assign(const Map& acc) {
    terms_.clear();
    for (const auto& [b, v] : acc) terms_.push_back({b, v});
    prune();
  }

 private:
  void check_blade(Blade b) const {
    if (b.grade() != grade_) throw std::domain_error("term grade does not match multivector grade");
    if (b.bits() & ~sig_.full_mask()) throw std::domain_error("index out of range for " + sig_.str());
  }

  void prune() {
    double cut = 0;
    if constexpr (std::is_floating_point_v<Scalar> || detail::is_complex<Scalar>::value)
      cut = kPruneRelative * max_abs();
    std::erase_if(terms_, [cut](const term_type& t) {
      double m = detail::magnitude(t.value);
      return m == 0 || m < cut;
    });
  }

  BasicMultivector combine(const BasicMultivector& o, Scalar s) const {
    require_same(sig_, o.sig_);
    if (grade_ != o.grade_) throw std::domain_error("cannot add multivectors of different grade");
    std::map<Blade, Scalar, LexLess> acc;
    for (const auto& t : terms_) acc[t.blade] += t.value;
    for (const auto& t : o.terms_) acc[t.blade] += s * t.value;
    BasicMultivector r(sig_, grade_);
    r.assign(acc);
    return r;
  }

  Signature sig_;
  int grade_;
  std::vector<term_type> terms_;
};

using Multivector = BasicMultivector<double>;
using ComplexMultivector = BasicMultivector<Complex>;
using ExactMultivector = BasicMultivector<long long>;

namespace detail {

template <class S, class Op>
BasicMultivector<S> bilinear(const BasicMultivector<S>& u, const BasicMultivector<S>& v, int grade, Op op) {
  require_same(u.signature(), v.signature());
  std::map<Blade, S, LexLess> acc;
  for (const auto& a : u.terms())
    for (const auto& b : v.terms()) {
      SignedBlade sb = op(a.blade, b.blade);
      if (sb.sign != 0) acc[sb.blade] += S(sb.sign) * a.value * b.value;
    }
  BasicMultivector<S> r(u.signature(), grade);
  r.assign(acc);
  return r;
}

template <class S, class Op>
BasicMultivector<S> unary(const BasicMultivector<S>& u, int grade, Op op) {
  std::map<Blade, S, LexLess> acc;
  for (const auto& a : u.terms()) {
    SignedBlade sb = op(a.blade);
    if (sb.sign != 0) acc[sb.blade] += S(sb.sign) * a.value;
  }
  BasicMultivector<S> r(u.signature(), grade);
  r.assign(acc);
  return r;
}

}  // namespace detail

// Dot product of equal-grade multivectors (bilinear, no conjugation).
template <class S>
S dot(const BasicMultivector<S>& u, const BasicMultivector<S>& v) {
  require_same(u.signature(), v.signature());
  if (u.grade() != v.grade()) throw std::domain_error("dot requires equal grades");
  S acc(0);
  for (const auto& a : u.terms()) {
    S b = v.coefficient(a.blade);
    if (b != S(0)) acc += S(metric_sign(a.blade, u.signature())) * a.value * b;
  }
  return acc;
}

template <class S>
BasicMultivector<S> wedge(const BasicMultivector<S>& u, const BasicMultivector<S>& v) {
  return detail::bilinear(u, v, u.grade() + v.grade(), [](Blade a, Blade b) { return blade_wedge(a, b); });
}

// u _| v; requires gr(u) <= gr(v).
template <class S>
BasicMultivector<S> left_interior(const BasicMultivector<S>& u, const BasicMultivector<S>& v) {
  if (u.grade() > v.grade()) throw std::domain_error("left interior requires gr(u) <= gr(v)");
  const Signature sig = u.signature();
  return detail::bilinear(u, v, v.grade() - u.grade(),
                          [&sig](Blade a, Blade b) { return blade_left_interior(a, b, sig); });
}

// u |_ v; requires gr(u) >= gr(v).
template <class S>
BasicMultivector<S> right_interior(const BasicMultivector<S>& u, const BasicMultivector<S>& v) {
  if (u.grade() < v.grade()) throw std::domain_error("right interior requires gr(u) >= gr(v)");
  const Signature sig = u.signature();
  return detail::bilinear(u, v, u.grade() - v.grade(),
                          [&sig](Blade a, Blade b) { return blade_right_interior(a, b, sig); });
}

template <class S>
BasicMultivector<S> hodge(const BasicMultivector<S>& u) {
  const Signature sig = u.signature();
  return detail::unary(u, sig.dimension() - u.grade(), [&sig](Blade a) { return blade_hodge(a, sig); });
}

template <class S>
BasicMultivector<S> inv_hodge(const BasicMultivector<S>& u) {
  const Signature sig = u.signature();
  return detail::unary(u, sig.dimension() - u.grade(),
                       [&sig](Blade a) { return blade_inv_hodge(a, sig); });
}

// (v ^ w)^{H^-1}, only in (0,3).
template <class S>
BasicMultivector<S> cross(const BasicMultivector<S>& v, const BasicMultivector<S>& w) {
  if (!(v.signature() == Signature(0, 3)) || v.grade() != 1 || w.grade() != 1)
    throw std::domain_error("cross product is defined for vectors in (0,3)");
  return inv_hodge(wedge(v, w));
}

inline ComplexMultivector conj(const ComplexMultivector& u) {
  std::vector<Term<Complex>> t;
  for (const auto& a : u.terms()) t.push_back({a.blade, std::conj(a.value)});
  return ComplexMultivector(u.signature(), u.grade(), t);
}

inline ComplexMultivector to_complex(const Multivector& u) {
  std::vector<Term<Complex>> t;
  for (const auto& a : u.terms()) t.push_back({a.blade, Complex(a.value)});
  return ComplexMultivector(u.signature(), u.grade(), t);
}

inline Multivector real_part(const ComplexMultivector& u) {
  std::vector<Term<double>> t;
  for (const auto& a : u.terms()) t.push_back({a.blade, a.value.real()});
  return Multivector(u.signature(), u.grade(), t);
}

inline Multivector imag_part(const ComplexMultivector& u) {
  std::vector<Term<double>> t;
  for (const auto& a : u.terms()) t.push_back({a.blade, a.value.imag()});
  return Multivector(u.signature(), u.grade(), t);
}

template <class S>
double max_abs_diff(const BasicMultivector<S>& a, const BasicMultivector<S>& b) {
  return (a - b).max_abs();
}

// Euclidean coefficient norm.
template <class S>
double coefficient_norm(const BasicMultivector<S>& a) {
  double s = 0;
  for (const auto& t : a.terms()) s += detail::magnitude(t.value) * detail::magnitude(t.value);
  return std::sqrt(s);
}

}  // namespace extmax

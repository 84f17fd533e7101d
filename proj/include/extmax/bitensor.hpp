#pragma once

#include <functional>
#include <vector>

#include "extmax/multivector.hpp"

namespace extmax {

// Symmetric bitensor sum_{i<=j} T_ij u_ij with dense upper-triangle storage.
template <class Scalar>
class BasicBitensor {
 public:
  explicit BasicBitensor(Signature sig) : sig_(sig), d_(sig.dimension()), c_(d_ * (d_ + 1) / 2, Scalar(0)) {}

  // entry(i, j) is called for i <= j only.
  BasicBitensor(Signature sig, const std::function<Scalar(int, int)>& entry) : BasicBitensor(sig) {
    for (int i = 0; i < d_; ++i)
      for (int j = i; j < d_; ++j) c_[slot(i, j)] = entry(i, j);
  }

  const Signature& signature() const { return sig_; }
  int dimension() const { return d_; }
  Scalar operator()(int i, int j) const { return c_[slot(i, j)]; }

  friend BasicBitensor operator+(BasicBitensor a, const BasicBitensor& b) {
    require_same(a.sig_, b.sig_);
    for (std::size_t s = 0; s < a.c_.size(); ++s) a.c_[s] += b.c_[s];
    return a;
  }
  friend BasicBitensor operator-(BasicBitensor a, const BasicBitensor& b) { return a + (Scalar(-1) * b); }
  friend BasicBitensor operator*(Scalar s, BasicBitensor a) {
    for (auto& v : a.c_) v *= s;
    return a;
  }

  double max_abs() const {
    double m = 0;
    for (const auto& v : c_) m = std::max(m, detail::magnitude(v));
    return m;
  }

 private:
  int slot(int i, int j) const {
    if (i < 0 || j < 0 || i >= d_ || j >= d_) throw std::domain_error("bitensor index out of range");
    if (i > j) std::swap(i, j);
    return i * d_ - i * (i - 1) / 2 + (j - i);
  }

  Signature sig_;
  int d_;
  std::vector<Scalar> c_;
};

using Bitensor = BasicBitensor<double>;
using ComplexBitensor = BasicBitensor<Complex>;

// a _| T for a vector a: (a _| T)_m = sum_i Delta_ii a_i T_im.
template <class S>
BasicMultivector<S> vec_interior_bitensor(const BasicMultivector<S>& a, const BasicBitensor<S>& t) {
  require_same(a.signature(), t.signature());
  if (a.grade() != 1) throw std::domain_error("vec_interior_bitensor requires a vector");
  const Signature& sig = a.signature();
  std::vector<S> out(sig.dimension(), S(0));
  for (const auto& term : a.terms()) {
    int i = std::countr_zero(term.blade.bits());
    for (int m = 0; m < sig.dimension(); ++m) out[m] += S(sig.metric(i)) * term.value * t(i, m);
  }
  return BasicMultivector<S>::vector(sig, out);
}

// Ordered entries 1/2 Delta_ii Delta_jj (e_i _| F).(G |_ e_j) and (e_i ^ F).(G ^ e_j).
template <class S>
S odot_entry(const BasicMultivector<S>& f, const BasicMultivector<S>& g, int i, int j) {
  const Signature& sig = f.signature();
  auto ei = BasicMultivector<S>::basis(sig, Blade::single(i));
  auto ej = BasicMultivector<S>::basis(sig, Blade::single(j));
  if (f.grade() == 0) return S(0);
  return S(0.5 * sig.metric(i) * sig.metric(j)) * dot(left_interior(ei, f), right_interior(g, ej));
}

template <class S>
S owedge_entry(const BasicMultivector<S>& f, const BasicMultivector<S>& g, int i, int j) {
  const Signature& sig = f.signature();
  auto ei = BasicMultivector<S>::basis(sig, Blade::single(i));
  auto ej = BasicMultivector<S>::basis(sig, Blade::single(j));
  return S(0.5 * sig.metric(i) * sig.metric(j)) * dot(wedge(ei, f), wedge(g, ej));
}

template <class S>
BasicBitensor<S> odot(const BasicMultivector<S>& f, const BasicMultivector<S>& g) {
  require_same(f.signature(), g.signature());
  if (f.grade() != g.grade()) throw std::domain_error("odot requires equal grades");
  return BasicBitensor<S>(f.signature(), [&](int i, int j) { return odot_entry(f, g, i, j); });
}

template <class S>
BasicBitensor<S> owedge(const BasicMultivector<S>& f, const BasicMultivector<S>& g) {
  require_same(f.signature(), g.signature());
  if (f.grade() != g.grade()) throw std::domain_error("owedge requires equal grades");
  return BasicBitensor<S>(f.signature(), [&](int i, int j) { return owedge_entry(f, g, i, j); });
}

}  // namespace extmax

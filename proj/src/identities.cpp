#include "extmax/identities.hpp"

#include <functional>

#include "extmax/multivector.hpp"

namespace extmax {

namespace {

using MV = ExactMultivector;

class Suite {
 public:
  explicit Suite(const Signature& sig, bool flip) : sig_(sig), flip_(flip), d_(sig.dimension()) {
    for (int g = 0; g <= d_; ++g) {
      std::vector<MV> row;
      for (Blade b : blades_of_grade(d_, g)) row.push_back(MV::basis(sig, b));
      basis_.push_back(std::move(row));
    }
  }

  IdentityReport run() {
    IdentityReport rep{sig_, {}, 0};
    add(rep, "wedge_skew_commutativity", [&](IdentityResult& r) { skew_commutativity(r); });
    add(rep, "interior_swap", [&](IdentityResult& r) { interior_swap(r); });
    add(rep, "interior_equal_grade_dot", [&](IdentityResult& r) { equal_grade_dot(r); });
    add(rep, "wedge_dot_expansion", [&](IdentityResult& r) { wedge_dot_expansion(r); });
    add(rep, "wedge_dot_expansion_alt", [&](IdentityResult& r) { wedge_dot_expansion_alt(r); });
    add(rep, "double_interior_assoc", [&](IdentityResult& r) { double_interior_assoc(r); });
    add(rep, "double_interior_anticomm", [&](IdentityResult& r) { double_interior_anticomm(r); });
    add(rep, "interior_of_wedge", [&](IdentityResult& r) { interior_of_wedge(r); });
    add(rep, "triple_product", [&](IdentityResult& r) { triple_product(r); });
    add(rep, "triple_product_alt", [&](IdentityResult& r) { triple_product_alt(r); });
    add(rep, "hodge_round_trip", [&](IdentityResult& r) { hodge_round_trip(r); });
    return rep;
  }

 private:
  static void note(IdentityResult& r, const MV& lhs, const MV& rhs) {
    ++r.cases;
    r.max_residual = std::max(r.max_residual, static_cast<double>((lhs - rhs).max_abs()));
  }
  static void note(IdentityResult& r, long long lhs, long long rhs) {
    ++r.cases;
    r.max_residual = std::max(r.max_residual, static_cast<double>(std::llabs(lhs - rhs)));
  }
  static int parity(long long e) { return (e & 1) ? -1 : 1; }

  void add(IdentityReport& rep, const char* name, const std::function<void(IdentityResult&)>& body) {
    IdentityResult r;
    r.name = name;
    body(r);
    rep.max_residual = std::max(rep.max_residual, r.max_residual);
    rep.results.push_back(r);
  }

  void skew_commutativity(IdentityResult& r) {
    for (int a = 0; a <= d_; ++a)
      for (int b = 0; a + b <= d_; ++b)
        for (const MV& u : basis_[a])
          for (const MV& v : basis_[b]) {
            long long s = parity(a * b);
            if (flip_ && a == 0 && b == 1) s = -s;
            note(r, wedge(u, v), s * wedge(v, u));
          }
  }

  void interior_swap(IdentityResult& r) {
    for (int a = 0; a <= d_; ++a)
      for (int b = a; b <= d_; ++b)
        for (const MV& u : basis_[a])
          for (const MV& v : basis_[b]) note(r, left_interior(u, v), parity(a * (a + b)) * right_interior(v, u));
  }

  void equal_grade_dot(IdentityResult& r) {
    for (int a = 0; a <= d_; ++a)
      for (const MV& u : basis_[a])
        for (const MV& v : basis_[a]) {
          note(r, left_interior(u, v).coefficient(Blade()), dot(u, v));
          note(r, right_interior(u, v).coefficient(Blade()), dot(u, v));
        }
  }

  // (v ^ w).(w' ^ v') = (-1)^r (v.v')(w.w') + (v' _| w).(w' |_ v)
  void wedge_dot_expansion(IdentityResult& r) {
    for (int g = 1; g < d_; ++g)
      for (const MV& v : basis_[1])
        for (const MV& vp : basis_[1])
          for (const MV& w : basis_[g])
            for (const MV& wp : basis_[g]) {
              long long lhs = dot(wedge(v, w), wedge(wp, vp));
              long long rhs = parity(g) * dot(v, vp) * dot(w, wp) +
                              dot(left_interior(vp, w), right_interior(wp, v));
              note(r, lhs, rhs);
            }
  }

  // (v.v')(w.w') = (v ^ w).(v' ^ w') + (v _| w').(v' _| w)
  void wedge_dot_expansion_alt(IdentityResult& r) {
    for (int g = 1; g < d_; ++g)
      for (const MV& v : basis_[1])
        for (const MV& vp : basis_[1])
          for (const MV& w : basis_[g])
            for (const MV& wp : basis_[g]) {
              long long lhs = dot(v, vp) * dot(w, wp);
              long long rhs = dot(wedge(v, w), wedge(vp, wp)) + dot(left_interior(v, wp), left_interior(vp, w));
              note(r, lhs, rhs);
            }
  }

  // u _| (w |_ v) = (u _| w) |_ v
  void double_interior_assoc(IdentityResult& r) {
    for (int g = 2; g <= d_; ++g)
      for (const MV& u : basis_[1])
        for (const MV& v : basis_[1])
          for (const MV& w : basis_[g]) note(r, left_interior(u, right_interior(w, v)), right_interior(left_interior(u, w), v));
  }

  // u _| (v _| w) = -v _| (u _| w)
  void double_interior_anticomm(IdentityResult& r) {
    for (int g = 2; g <= d_; ++g)
      for (const MV& u : basis_[1])
        for (const MV& v : basis_[1])
          for (const MV& w : basis_[g]) note(r, left_interior(u, left_interior(v, w)), -left_interior(v, left_interior(u, w)));
  }

  // u _| (v ^ w) = (-1)^r (u.v) w + v ^ (u _| w)
  void interior_of_wedge(IdentityResult& r) {
    for (int g = 1; g < d_; ++g)
      for (const MV& u : basis_[1])
        for (const MV& v : basis_[1])
          for (const MV& w : basis_[g])
            note(r, left_interior(u, wedge(v, w)), parity(g) * dot(u, v) * w + wedge(v, left_interior(u, w)));
  }

  // (u ^ v).w = v.(w |_ u) = u.(v _| w), gr(v) = r - 1, gr(w) = r
  void triple_product(IdentityResult& r) {
    for (int g = 1; g <= d_; ++g)
      for (const MV& u : basis_[1])
        for (const MV& v : basis_[g - 1])
          for (const MV& w : basis_[g]) {
            long long a = dot(wedge(u, v), w);
            note(r, a, dot(v, right_interior(w, u)));
            note(r, a, dot(u, left_interior(v, w)));
          }
  }

  // (u ^ v).w = (-1)^(r-1) (u _| w).v = (v _| w).u
  void triple_product_alt(IdentityResult& r) {
    for (int g = 1; g <= d_; ++g)
      for (const MV& u : basis_[1])
        for (const MV& v : basis_[g - 1])
          for (const MV& w : basis_[g]) {
            long long a = dot(wedge(u, v), w);
            note(r, a, parity(g - 1) * dot(left_interior(u, w), v));
            note(r, a, dot(left_interior(v, w), u));
          }
  }

  void hodge_round_trip(IdentityResult& r) {
    for (int g = 0; g <= d_; ++g)
      for (const MV& u : basis_[g]) {
        note(r, inv_hodge(hodge(u)), u);
        note(r, hodge(inv_hodge(u)), u);
      }
  }

  Signature sig_;
  bool flip_;
  int d_;
  std::vector<std::vector<MV>> basis_;
};

}  // namespace

IdentityReport verify_identities(const Signature& sig, const IdentityOptions& opts) {
  if (sig.dimension() > opts.max_dimension)
    throw std::domain_error("dimension " + std::to_string(sig.dimension()) + " of " + sig.str() +
                            " exceeds the configured cap " + std::to_string(opts.max_dimension));
  return Suite(sig, opts.inject_sign_flip).run();
}

}  // namespace extmax

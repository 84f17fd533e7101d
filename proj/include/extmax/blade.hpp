#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "extmax/signature.hpp"

namespace extmax {

// A strictly increasing index list, stored as a bitmask.
class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t bits) : bits_(bits) {}

  // Requires a strictly increasing list of non-negative indices.
  static Blade from_indices(std::span<const int> indices);
  static Blade single(int i) { return Blade(1u << i); }

  constexpr std::uint32_t bits() const { return bits_; }
  int grade() const { return std::popcount(bits_); }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  bool empty() const { return bits_ == 0; }
  std::vector<int> indices() const;

  Blade operator|(Blade o) const { return Blade(bits_ | o.bits_); }
  Blade operator&(Blade o) const { return Blade(bits_ & o.bits_); }
  Blade minus(Blade o) const { return Blade(bits_ & ~o.bits_); }
  bool subset_of(Blade o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr bool operator==(Blade, Blade) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Lexicographic order of the index lists.
bool lex_less(Blade a, Blade b);

struct LexLess {
  bool operator()(Blade a, Blade b) const { return lex_less(a, b); }
};

// Sort an arbitrary index sequence; sign is 0 when an index repeats.
struct SortResult {
  std::vector<int> sorted;
  int sign;
};
SortResult sort_with_sign(std::span<const int> seq, int dimension);

// sigma(I, J): parity of sorting the concatenation (I, J); 0 if they overlap.
int sigma(Blade a, Blade b);

// Delta_II
inline int metric_sign(Blade b, const Signature& sig) {
  return (std::popcount(b.bits() & sig.time_mask()) & 1) ? -1 : 1;
}

// All blades of a grade in lexicographic order.
std::vector<Blade> blades_of_grade(int dimension, int grade);

// Dense rank of each blade of one grade, lexicographic.
class BladeIndexer {
 public:
  BladeIndexer(int dimension, int grade);
  int size() const { return static_cast<int>(blades_.size()); }
  Blade blade(int rank) const { return blades_[rank]; }
  int rank(Blade b) const { return rank_[b.bits()]; }

 private:
  std::vector<Blade> blades_;
  std::vector<int> rank_;
};

// Exact products of basis blades: coefficient sign (possibly 0) and result blade.
struct SignedBlade {
  int sign;
  Blade blade;
};

SignedBlade blade_wedge(Blade a, Blade b);
SignedBlade blade_left_interior(Blade a, Blade b, const Signature& sig);
SignedBlade blade_right_interior(Blade a, Blade b, const Signature& sig);
SignedBlade blade_hodge(Blade a, const Signature& sig);
SignedBlade blade_inv_hodge(Blade a, const Signature& sig);
int blade_dot(Blade a, Blade b, const Signature& sig);

std::uint64_t binomial(int n, int k);

}  // namespace extmax

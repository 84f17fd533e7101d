#include "extmax/blade.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace extmax {

Blade Blade::from_indices(std::span<const int> indices) {
  std::uint32_t bits = 0;
  int prev = -1;
  for (int i : indices) {
    if (i <= prev) throw std::domain_error("index list must be strictly increasing");
    if (i >= 32) throw std::domain_error("index out of range");
    bits |= 1u << i;
    prev = i;
  }
  return Blade(bits);
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (std::uint32_t x = bits_; x; x &= x - 1) out.push_back(std::countr_zero(x));
  return out;
}

bool lex_less(Blade a, Blade b) {
  std::uint32_t x = a.bits(), y = b.bits();
  while (x && y) {
    int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return !x && y;
}

SortResult sort_with_sign(std::span<const int> seq, int dimension) {
  SortResult res{std::vector<int>(seq.begin(), seq.end()), 1};
  for (int i : seq)
    if (i < 0 || i >= dimension)
      throw std::domain_error("index " + std::to_string(i) + " out of range");
  auto& v = res.sorted;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) {
        res.sign = 0;
        break;
      }
      std::swap(v[j - 1], v[j]);
      res.sign = -res.sign;
    }
    if (res.sign == 0) break;
  }
  if (res.sign == 0) std::sort(v.begin(), v.end());
  return res;
}

int sigma(Blade a, Blade b) {
  if (a.bits() & b.bits()) return 0;
  int inversions = 0;
  for (std::uint32_t y = b.bits(); y; y &= y - 1) {
    int j = std::countr_zero(y);
    std::uint32_t above = j >= 31 ? 0u : ~((2u << j) - 1u);
    inversions += std::popcount(a.bits() & above);
  }
  return (inversions & 1) ? -1 : 1;
}

std::vector<Blade> blades_of_grade(int dimension, int grade) {
  std::vector<Blade> out;
  if (grade < 0 || grade > dimension) return out;
  std::vector<int> idx(grade);
  for (int i = 0; i < grade; ++i) idx[i] = i;
  while (true) {
    out.push_back(Blade::from_indices(idx));
    int p = grade - 1;
    while (p >= 0 && idx[p] == dimension - grade + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < grade; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

BladeIndexer::BladeIndexer(int dimension, int grade)
    : blades_(blades_of_grade(dimension, grade)), rank_(std::size_t{1} << dimension, -1) {
  for (std::size_t r = 0; r < blades_.size(); ++r) rank_[blades_[r].bits()] = static_cast<int>(r);
}

SignedBlade blade_wedge(Blade a, Blade b) { return {sigma(a, b), a | b}; }

SignedBlade blade_left_interior(Blade a, Blade b, const Signature& sig) {
  if (!a.subset_of(b)) return {0, Blade()};
  Blade rest = b.minus(a);
  return {metric_sign(a, sig) * sigma(rest, a), rest};
}

SignedBlade blade_right_interior(Blade a, Blade b, const Signature& sig) {
  if (!b.subset_of(a)) return {0, Blade()};
  Blade rest = a.minus(b);
  return {metric_sign(b, sig) * sigma(b, rest), rest};
}

SignedBlade blade_hodge(Blade a, const Signature& sig) {
  Blade c(sig.full_mask() & ~a.bits());
  return {metric_sign(a, sig) * sigma(a, c), c};
}

SignedBlade blade_inv_hodge(Blade a, const Signature& sig) {
  Blade c(sig.full_mask() & ~a.bits());
  return {metric_sign(c, sig) * sigma(c, a), c};
}

int blade_dot(Blade a, Blade b, const Signature& sig) {
  return a == b ? metric_sign(a, sig) : 0;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace extmax

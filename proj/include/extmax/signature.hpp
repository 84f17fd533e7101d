#pragma once

#include <stdexcept>
#include <string>

namespace extmax {

// Metric signature: k time axes (Delta = -1) followed by n space axes (+1).
class Signature {
 public:
  static constexpr int kMaxDimension = 16;

  Signature(int k, int n) : k_(k), n_(n) {
    if (k < 0 || n < 0 || k + n < 1 || k + n > kMaxDimension)
      throw std::domain_error("invalid signature (" + std::to_string(k) + "," +
                              std::to_string(n) + ")");
  }

  int time_dims() const { return k_; }
  int space_dims() const { return n_; }
  int dimension() const { return k_ + n_; }

  // Delta_ii
  int metric(int i) const {
    if (i < 0 || i >= dimension()) throw std::domain_error("axis out of range");
    return i < k_ ? -1 : 1;
  }
  bool is_time_axis(int i) const { return i < k_; }
  unsigned time_mask() const { return (1u << k_) - 1u; }
  unsigned full_mask() const { return (1u << dimension()) - 1u; }

  friend bool operator==(const Signature&, const Signature&) = default;

  std::string str() const {
    return "(" + std::to_string(k_) + "," + std::to_string(n_) + ")";
  }

 private:
  int k_;
  int n_;
};

inline void require_same(const Signature& a, const Signature& b) {
  if (!(a == b))
    throw std::invalid_argument("signature mismatch " + a.str() + " vs " + b.str());
}

}  // namespace extmax

#include "extmax/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>
#include <map>
#include <mutex>
#include <stdexcept>

namespace extmax {

namespace {

QuadratureRule build_rule(int n) {
  QuadratureRule rule;
  // legendre_p_zeros returns the non-negative zeros in ascending order
  std::vector<double> pos = boost::math::legendre_p_zeros<double>(n);
  std::vector<double> nodes;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it)
    if (*it != 0.0) nodes.push_back(-*it);
  for (double z : pos) nodes.push_back(z);
  for (double x : nodes) {
    double dp = boost::math::legendre_p_prime<double>(n, x);
    rule.nodes.push_back(x);
    rule.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre(int points) {
  if (points < 1 || points > 512) throw std::domain_error("unsupported quadrature order");
  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(points);
  if (it == cache.end()) it = cache.emplace(points, build_rule(points)).first;
  return it->second;
}

QuadratureRule composite_rule(Interval iv, int points, int panels) {
  if (panels < 1) throw std::domain_error("panels must be positive");
  const QuadratureRule& base = gauss_legendre(points);
  QuadratureRule out;
  double width = (iv.hi - iv.lo) / panels;
  for (int p = 0; p < panels; ++p) {
    double a = iv.lo + p * width;
    double half = 0.5 * width, mid = a + half;
    for (std::size_t q = 0; q < base.nodes.size(); ++q) {
      out.nodes.push_back(mid + half * base.nodes[q]);
      out.weights.push_back(half * base.weights[q]);
    }
  }
  return out;
}

}  // namespace extmax

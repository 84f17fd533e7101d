#pragma once

#include <vector>

namespace extmax {

struct Interval {
  double lo;
  double hi;
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1].
const QuadratureRule& gauss_legendre(int points);

// Composite rule: `panels` equal sub-intervals with `points` nodes each.
QuadratureRule composite_rule(Interval iv, int points, int panels = 1);

struct QuadratureOptions {
  int points = 8;
  int panels = 1;
};

}  // namespace extmax

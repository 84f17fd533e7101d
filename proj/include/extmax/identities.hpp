#pragma once

#include <string>
#include <vector>

#include "extmax/signature.hpp"

namespace extmax {

struct IdentityOptions {
  int max_dimension = 6;
  // Test hook: flips one sign so the suite must report a failure.
  bool inject_sign_flip = false;
};

struct IdentityResult {
  std::string name;
  long long cases = 0;
  double max_residual = 0;
};

struct IdentityReport {
  Signature signature;
  std::vector<IdentityResult> results;
  double max_residual = 0;
  bool passed(double tol) const { return max_residual <= tol; }
};

// Exhaustive check of the algebraic identities over all basis blades, with
// integer coefficients so residuals are exact.
IdentityReport verify_identities(const Signature& sig, const IdentityOptions& opts = {});

}  // namespace extmax

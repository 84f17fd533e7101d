#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "extmax/bitensor.hpp"
#include "extmax/field.hpp"
#include "extmax/spectrum.hpp"

namespace extmax {

using json = nlohmann::ordered_json;

// Raised for malformed or inconsistent input documents.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json signature_to_json(const Signature& sig);
Signature signature_from_json(const json& j);

json to_json(const Multivector& m);
json to_json(const ComplexMultivector& m);
// Signature falls back to `sig` when the document has none.
ComplexMultivector multivector_from_json(const json& j, std::optional<Signature> sig = std::nullopt);

json to_json(const Bitensor& t);
json to_json(const MultivectorField& f);
MultivectorField field_from_json(const json& j, const Signature& sig);

struct SliceConfig {
  int axis = 0;
  double position = 0.0;
  std::vector<Interval> bounds;
  QuadratureOptions quadrature{8, 8};
};

struct SpectrumConfig {
  std::vector<SpectralBump> bumps;
  QuadratureOptions frequency_quadrature{16, 4};
  double support_radius = 6.0;
};

struct Scenario {
  Signature signature{1, 3};
  int r = 2;
  std::optional<MultivectorField> F;
  std::optional<MultivectorField> J;
  std::optional<MultivectorField> A;
  std::vector<std::string> checks;
  int sample_points = 16;
  unsigned long long seed = 0;
  double tol = 1e-9;
  std::vector<Interval> sample_box;  // defaults to [-1, 1] per axis
  std::optional<Point> point;
  std::optional<SliceConfig> slice;
  std::optional<SpectrumConfig> spectrum;
};

Scenario scenario_from_json(const json& j);
Scenario load_scenario(const std::string& path);

}  // namespace extmax

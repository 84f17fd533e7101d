#include "extmax/serialization.hpp"

#include <fstream>
#include <set>

#include "extmax/maxwell.hpp"

namespace extmax {

namespace {

template <class T>
T get(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return get<T>(j, key);
}

std::vector<Interval> intervals_from_json(const json& j) {
  std::vector<Interval> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw ConfigError("intervals must be [lo, hi] pairs");
    out.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  return out;
}

QuadratureOptions quadrature_from_json(const json& j, QuadratureOptions q) {
  q.points = get_or<int>(j, "points", q.points);
  q.panels = get_or<int>(j, "panels", q.panels);
  if (q.points < 1 || q.panels < 1) throw ConfigError("quadrature points and panels must be positive");
  return q;
}

template <class S>
json mv_json(const BasicMultivector<S>& m, bool complex) {
  json terms = json::array();
  for (const auto& t : m.terms()) {
    json e;
    e["indices"] = t.blade.indices();
    if constexpr (detail::is_complex<S>::value) {
      e["re"] = t.value.real();
      if (complex) e["im"] = t.value.imag();
    } else {
      e["re"] = t.value;
    }
    terms.push_back(e);
  }
  json j;
  j["signature"] = signature_to_json(m.signature());
  j["grade"] = m.grade();
  j["terms"] = terms;
  return j;
}

}  // namespace

json signature_to_json(const Signature& sig) {
  json j;
  j["k"] = sig.time_dims();
  j["n"] = sig.space_dims();
  return j;
}

Signature signature_from_json(const json& j) {
  try {
    return Signature(get<int>(j, "k"), get<int>(j, "n"));
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
}

json to_json(const Multivector& m) { return mv_json(m, false); }
json to_json(const ComplexMultivector& m) { return mv_json(m, true); }

ComplexMultivector multivector_from_json(const json& j, std::optional<Signature> sig) {
  if (!j.is_object()) throw ConfigError("multivector must be an object");
  Signature s = j.contains("signature") ? signature_from_json(j.at("signature"))
                                        : (sig ? *sig : throw ConfigError("multivector has no signature"));
  if (sig && !(s == *sig)) throw ConfigError("multivector signature " + s.str() + " does not match " + sig->str());
  int grade = get<int>(j, "grade");
  if (grade < 0 || grade > s.dimension()) throw ConfigError("grade out of range");
  std::vector<Term<Complex>> terms;
  std::set<std::uint32_t> seen;
  for (const auto& t : get_or<json>(j, "terms", json::array())) {
    auto idx = get<std::vector<int>>(t, "indices");
    if (static_cast<int>(idx.size()) != grade) throw ConfigError("term index count does not match grade");
    Blade b;
    try {
      b = Blade::from_indices(idx);
    } catch (const std::domain_error& e) {
      throw ConfigError(e.what());
    }
    if (b.bits() & ~s.full_mask()) throw ConfigError("index out of range for " + s.str());
    if (!seen.insert(b.bits()).second) throw ConfigError("duplicate index list in terms");
    terms.push_back({b, Complex(get<double>(t, "re"), get_or<double>(t, "im", 0.0))});
  }
  return ComplexMultivector(s, grade, terms);
}

json to_json(const Bitensor& t) {
  json out = json::array();
  for (int i = 0; i < t.dimension(); ++i)
    for (int j = i; j < t.dimension(); ++j) out.push_back(json::array({i, j, t(i, j)}));
  return out;
}

json to_json(const MultivectorField& f) {
  json j;
  j["signature"] = signature_to_json(f.signature());
  j["grade"] = f.grade();
  if (!f.is_analytic()) {
    const auto& g = f.grid_samples();
    j["backend"] = "grid";
    json vals = json::array();
    for (const auto& v : g.values) vals.push_back(to_json(v));
    j["grid"] = {{"origin", g.origin}, {"spacing", g.spacing}, {"shape", g.shape}, {"values", vals}};
    return j;
  }
  j["backend"] = "modes";
  json modes = json::array(), polys = json::array();
  for (const auto& t : f.terms()) {
    bool poly = std::any_of(t.atom.powers.begin(), t.atom.powers.end(), [](int p) { return p != 0; });
    if (poly) {
      json p;
      p["powers"] = t.atom.powers;
      p["xi"] = t.atom.xi;
      p["phase"] = t.atom.phase;
      p["waveform"] = t.real_part ? "cos" : "exp";
      p["amplitude"] = to_json(t.amplitude);
      if (t.atom.envelope)
        p["envelope"] = {{"type", "gaussian"}, {"width", t.atom.envelope->width}, {"center", t.atom.envelope->center}};
      polys.push_back(p);
      continue;
    }
    json m;
    m["xi"] = t.atom.xi;
    m["phase"] = t.atom.phase;
    m["waveform"] = t.real_part ? "cos" : "exp";
    if (t.atom.envelope)
      m["envelope"] = {{"type", "gaussian"}, {"width", t.atom.envelope->width}, {"center", t.atom.envelope->center}};
    else
      m["envelope"] = nullptr;
    m["amplitude"] = to_json(t.amplitude);
    modes.push_back(m);
  }
  j["modes"] = modes;
  if (!polys.empty()) j["polynomials"] = polys;
  return j;
}

namespace {

FieldTerm term_from_json(const json& m, const Signature& sig, int grade, bool polynomial) {
  FieldTerm t{multivector_from_json(get<json>(m, "amplitude"), sig), ScalarAtom{}, true};
  if (t.amplitude.grade() != grade) throw ConfigError("mode amplitude grade does not match field grade");
  const int d = sig.dimension();
  t.atom.xi = get_or<std::vector<double>>(m, "xi", std::vector<double>(d, 0.0));
  if (static_cast<int>(t.atom.xi.size()) != d) throw ConfigError("xi length must equal k+n");
  t.atom.phase = get_or<double>(m, "phase", 0.0);
  std::string wf = get_or<std::string>(m, "waveform", "cos");
  if (wf != "cos" && wf != "exp") throw ConfigError("waveform must be \"cos\" or \"exp\"");
  t.real_part = wf == "cos";
  if (polynomial) {
    t.atom.powers = get<std::vector<int>>(m, "powers");
    if (static_cast<int>(t.atom.powers.size()) != d) throw ConfigError("powers length must equal k+n");
    for (int p : t.atom.powers)
      if (p < 0) throw ConfigError("powers must be non-negative");
  }
  if (m.contains("envelope") && !m.at("envelope").is_null()) {
    const json& e = m.at("envelope");
    if (get_or<std::string>(e, "type", "gaussian") != "gaussian") throw ConfigError("only gaussian envelopes are supported");
    GaussianEnvelope env{get<double>(e, "width"), get_or<std::vector<double>>(e, "center", {})};
    if (!(env.width > 0)) throw ConfigError("envelope width must be positive");
    if (!env.center.empty() && static_cast<int>(env.center.size()) != d) throw ConfigError("envelope center length must equal k+n");
    t.atom.envelope = env;
  }
  return t;
}

}  // namespace

MultivectorField field_from_json(const json& j, const Signature& sig) {
  if (!j.is_object()) throw ConfigError("field must be an object");
  if (j.contains("signature") && !(signature_from_json(j.at("signature")) == sig))
    throw ConfigError("field signature does not match the scenario");
  int grade = get<int>(j, "grade");
  if (grade < 0 || grade > sig.dimension()) throw ConfigError("field grade out of range");
  std::string backend = get_or<std::string>(j, "backend", "modes");
  try {
    if (backend == "modes") {
      std::vector<FieldTerm> terms;
      for (const auto& m : get_or<json>(j, "modes", json::array())) terms.push_back(term_from_json(m, sig, grade, false));
      for (const auto& m : get_or<json>(j, "polynomials", json::array())) terms.push_back(term_from_json(m, sig, grade, true));
      return MultivectorField::analytic(sig, grade, std::move(terms));
    }
    if (backend == "grid") {
      const json& g = get<json>(j, "grid");
      GridSamples s{get<std::vector<double>>(g, "origin"), get<std::vector<double>>(g, "spacing"),
                    get<std::vector<int>>(g, "shape"), {}};
      for (const auto& v : get<json>(g, "values")) s.values.push_back(multivector_from_json(v, sig));
      return MultivectorField::grid(sig, grade, std::move(s));
    }
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("backend must be \"modes\" or \"grid\"");
}

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("scenario must be an object");
  Scenario s;
  s.signature = signature_from_json(get<json>(j, "signature"));
  const int d = s.signature.dimension();
  s.r = get<int>(j, "r");
  if (s.r < 1 || s.r > d) throw ConfigError("r must lie in [1, k+n]");
  auto field = [&](const char* key, int grade) -> std::optional<MultivectorField> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    MultivectorField f = field_from_json(j.at(key), s.signature);
    if (f.grade() != grade) throw ConfigError(std::string("field \"") + key + "\" has the wrong grade");
    return f;
  };
  s.F = field("F", s.r);
  s.J = field("J", s.r - 1);
  s.A = field("A", s.r - 1);
  if (!s.F && s.A) s.F = field_from_potential(*s.A);
  s.checks = get_or<std::vector<std::string>>(j, "checks", {});
  static const std::set<std::string> known = {"differential", "integral", "fourier", "gauge"};
  for (const auto& c : s.checks)
    if (!known.count(c)) throw ConfigError("unknown check \"" + c + "\"");
  s.sample_points = get_or<int>(j, "sample_points", 16);
  if (s.sample_points < 1) throw ConfigError("sample_points must be positive");
  s.seed = get_or<unsigned long long>(j, "seed", 0ULL);
  s.tol = get_or<double>(j, "tol", 1e-9);
  if (!(s.tol > 0)) throw ConfigError("tol must be positive");
  if (j.contains("sample_box")) {
    s.sample_box = intervals_from_json(j.at("sample_box"));
    if (static_cast<int>(s.sample_box.size()) != d) throw ConfigError("sample_box needs one interval per axis");
  } else {
    s.sample_box.assign(d, Interval{-1.0, 1.0});
  }
  if (j.contains("point")) {
    s.point = get<std::vector<double>>(j, "point");
    if (static_cast<int>(s.point->size()) != d) throw ConfigError("point length must equal k+n");
  }
  if (j.contains("slice")) {
    const json& sl = j.at("slice");
    SliceConfig c;
    c.axis = get<int>(sl, "axis");
    if (c.axis < 0 || c.axis >= d) throw ConfigError("slice axis out of range");
    c.position = get_or<double>(sl, "position", 0.0);
    if (sl.contains("bounds")) {
      c.bounds = intervals_from_json(sl.at("bounds"));
      if (static_cast<int>(c.bounds.size()) != d) throw ConfigError("slice bounds need one interval per axis");
    }
    c.quadrature = quadrature_from_json(sl, c.quadrature);
    s.slice = c;
  }
  if (j.contains("spectrum")) {
    const json& sp = j.at("spectrum");
    SpectrumConfig c;
    for (const auto& b : get<json>(sp, "bumps")) {
      SpectralBump bump{get<std::vector<double>>(b, "center"), get<double>(b, "width"),
                        multivector_from_json(get<json>(b, "amplitude"), s.signature),
                        get_or<bool>(b, "transverse", true)};
      if (static_cast<int>(bump.center.size()) != d) throw ConfigError("bump center length must equal k+n");
      if (bump.amplitude.grade() != s.r - 1) throw ConfigError("bump amplitude grade must be r-1");
      c.bumps.push_back(bump);
    }
    if (sp.contains("quadrature")) c.frequency_quadrature = quadrature_from_json(sp.at("quadrature"), c.frequency_quadrature);
    c.support_radius = get_or<double>(sp, "support_radius", c.support_radius);
    s.spectrum = c;
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return scenario_from_json(j);
}

}  // namespace extmax

#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "extmax/classical.hpp"
#include "extmax/energy_momentum.hpp"
#include "extmax/identities.hpp"
#include "extmax/integration.hpp"
#include "extmax/maxwell.hpp"
#include "extmax/random.hpp"

namespace extmax::cli {

namespace {

// Tracks named residual maxima against one tolerance.
class Gate {
 public:
  explicit Gate(double tol) : tol_(tol) {}
  double check(const std::string& name, double value) {
    if (!(value <= tol_)) flagged_.push_back(name);
    return value;
  }
  void flag(const std::string& name) { flagged_.push_back(name); }
  bool passed() const { return flagged_.empty(); }
  const std::vector<std::string>& flagged() const { return flagged_; }
  double tol() const { return tol_; }

 private:
  double tol_;
  std::vector<std::string> flagged_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

Scenario scenario_for(const RunConfig& cfg) {
  if (cfg.config_path.empty()) throw ConfigError(cfg.command + " needs --config");
  Scenario s = load_scenario(cfg.config_path);
  if (cfg.seed) s.seed = *cfg.seed;
  if (cfg.tol) s.tol = *cfg.tol;
  if (cfg.points) {
    if (*cfg.points < 1) throw ConfigError("--points must be positive");
    if (s.slice) s.slice->quadrature.points = *cfg.points;
  }
  return s;
}

std::vector<Point> sample_points(const Scenario& s) {
  Rng rng(s.seed);
  std::vector<Point> pts;
  for (int i = 0; i < s.sample_points; ++i) pts.push_back(random_point(rng, s.sample_box));
  return pts;
}

json header(const std::string& command, const Scenario& s) {
  json j;
  j["command"] = command;
  j["signature"] = signature_to_json(s.signature);
  j["r"] = s.r;
  j["seed"] = s.seed;
  j["tol"] = s.tol;
  j["sample_points"] = s.sample_points;
  return j;
}

CommandResult finish(json report, const Gate& gate, const std::string& title) {
  report["flagged"] = gate.flagged();
  report["passed"] = gate.passed();
  CommandResult out{std::move(report), gate.passed() ? kPass : kNumericalFailure, {}};
  std::ostringstream os;
  os << title << ": " << (gate.passed() ? "PASS" : "FAIL") << " (tol " << fmt(gate.tol()) << ")";
  for (const auto& f : gate.flagged()) os << "\n  flagged: " << f;
  out.summary = os.str();
  return out;
}

int quadrature_points(const RunConfig& cfg) { return cfg.points.value_or(12); }

}  // namespace

CommandResult cmd_verify_identities(const RunConfig& cfg) {
  if (cfg.cap < 1 || cfg.cap > kMaxCap)
    throw ConfigError("--cap must lie in [1, " + std::to_string(kMaxCap) + "]");
  const int kmax = cfg.kmax.value_or(cfg.cap), nmax = cfg.nmax.value_or(cfg.cap);
  if (kmax < 0 || nmax < 0) throw ConfigError("--kmax and --nmax must be non-negative");
  if (kmax > cfg.cap || nmax > cfg.cap)
    throw ConfigError("--kmax/--nmax exceed the dimension cap " + std::to_string(cfg.cap) + "; raise --cap (at most " +
                      std::to_string(kMaxCap) + ")");
  const double tol = cfg.tol.value_or(0.0);
  IdentityOptions opts{cfg.cap, cfg.inject_sign_flip};
  json sigs = json::array();
  double worst = 0;
  int count = 0;
  Gate gate(tol);
  for (int k = 0; k <= kmax; ++k)
    for (int n = 0; n <= nmax; ++n) {
      if (k + n < 1 || k + n > cfg.cap) continue;
      IdentityReport rep = verify_identities(Signature(k, n), opts);
      json results = json::array();
      for (const auto& r : rep.results)
        results.push_back({{"name", r.name}, {"cases", r.cases}, {"max_residual", r.max_residual}});
      sigs.push_back({{"k", k}, {"n", n}, {"max_residual", rep.max_residual}, {"passed", rep.passed(tol)},
                      {"results", results}});
      gate.check(Signature(k, n).str(), rep.max_residual);
      worst = std::max(worst, rep.max_residual);
      ++count;
    }
  json report;
  report["command"] = "verify-identities";
  report["cap"] = cfg.cap;
  report["kmax"] = kmax;
  report["nmax"] = nmax;
  report["tol"] = tol;
  report["signatures"] = sigs;
  report["max_residual"] = worst;
  CommandResult out = finish(report, gate, "verify-identities");
  out.summary += "\n  " + std::to_string(count) + " signatures, max residual " + fmt(worst);
  return out;
}

CommandResult cmd_maxwell_check(const RunConfig& cfg) {
  Scenario s = scenario_for(cfg);
  if (!s.F) throw ConfigError("scenario needs \"F\" or \"A\"");
  MaxwellSystem sys(*s.F, s.J);
  std::vector<std::string> checks = s.checks.empty() ? std::vector<std::string>{"differential"} : s.checks;
  auto pts = sample_points(s);
  Gate gate(s.tol);
  json report = header("maxwell-check", s);
  report["checks"] = checks;
  const int d = s.signature.dimension();

  for (const auto& check : checks) {
    if (check == "differential") {
      double inh = 0, hom = 0, cons = 0;
      for (const auto& x : pts) {
        auto res = maxwell_residuals(sys, x);
        inh = std::max(inh, res.inhomogeneous.max_abs());
        hom = std::max(hom, res.homogeneous.max_abs());
        cons = std::max(cons, charge_conservation_residual(sys, x).max_abs());
      }
      report["differential"] = {{"inhomogeneous_max", gate.check("inhomogeneous", inh)},
                                {"homogeneous_max", gate.check("homogeneous", hom)},
                                {"charge_conservation_max", gate.check("charge_conservation", cons)}};
    } else if (check == "gauge") {
      if (!s.A) throw ConfigError("the gauge check needs a potential \"A\"");
      MultivectorField j = s.J ? *s.J : MultivectorField::zero(s.signature, s.r - 1);
      double lorenz = 0, wave = 0, t_part = 0, s_part = 0;
      for (const auto& x : pts) {
        lorenz = std::max(lorenz, lorenz_gauge_residual(*s.A, x).max_abs());
        wave = std::max(wave, wave_equation_residual(*s.A, j, x).max_abs());
        auto tr = transverse_gauge_residuals(*s.A, x);
        t_part = std::max(t_part, tr.time_part.max_abs());
        s_part = std::max(s_part, tr.space_part.max_abs());
      }
      json g = {{"lorenz_max", gate.check("lorenz_gauge", lorenz)}, {"wave_equation_max", gate.check("wave_equation", wave)},
                {"transverse_time_max", t_part}, {"transverse_space_max", s_part}};
      report["gauge"] = g;
    } else if (check == "integral") {
      QuadratureOptions q{quadrature_points(cfg), 2};
      Point mid;
      for (const auto& iv : s.sample_box) mid.push_back(0.5 * (iv.lo + iv.hi));
      auto make_box = [&](int first, int count) {
        std::vector<int> axes;
        std::vector<Interval> ivs;
        for (int i = first; i < first + count; ++i) {
          axes.push_back(i);
          ivs.push_back(s.sample_box[i]);
        }
        return HypersurfaceBox(s.signature, axes, ivs, mid);
      };
      json in;
      if (s.r + 1 <= d) {
        auto c = integral_maxwell_check(sys, make_box(0, s.r + 1), q);
        in["circulation"] = gate.check("integral_circulation", std::abs(*c.circulation));
      }
      auto f = integral_maxwell_check(sys, make_box(s.r - 1, d - s.r + 1), q);
      in["flux"] = gate.check("integral_flux", std::abs(*f.flux));
      in["quadrature_points"] = q.points;
      report["integral"] = in;
    } else if (check == "fourier") {
      json modes = json::array();
      if (!s.F->is_analytic()) throw ConfigError("the fourier check needs a modes-backend field");
      for (const auto& t : s.F->terms()) {
        const auto& a = t.atom;
        bool plain = !a.envelope && std::all_of(a.powers.begin(), a.powers.end(), [](int p) { return p == 0; });
        if (!plain || a.xi.empty() || s.J) {
          modes.push_back({{"xi", a.xi}, {"skipped", s.J ? "source present" : "not a plane wave"}});
          continue;
        }
        auto rep = source_free_mode_report(a.xi, t.amplitude, s.tol);
        modes.push_back({{"xi", a.xi}, {"inhomogeneous", rep.inhomogeneous}, {"homogeneous", rep.homogeneous},
                         {"xi_dot_xi", rep.xi_dot_xi}, {"satisfies", rep.satisfies}, {"consistent", rep.consistent}});
        if (!rep.satisfies) gate.check("fourier_mode", std::max(rep.inhomogeneous, rep.homogeneous));
        if (!rep.consistent) gate.flag("fourier_consistency");
      }
      report["fourier"] = {{"modes", modes}};
    }
  }
  return finish(report, gate, "maxwell-check " + s.signature.str() + " r=" + std::to_string(s.r));
}

CommandResult cmd_stress_energy(const RunConfig& cfg) {
  Scenario s = scenario_for(cfg);
  if (!s.F) throw ConfigError("scenario needs \"F\" or \"A\"");
  if (!s.F->is_real()) throw ConfigError("the stress tensor needs a real field (cos waveforms)");
  if (s.J && !s.J->is_real()) throw ConfigError("the source must be real (cos waveforms)");
  const Signature& sig = s.signature;
  const int d = sig.dimension();
  Point x0 = s.point.value_or(Point(d, 0.0));
  Gate gate(s.tol);
  json report = header("stress-energy", s);
  report["point"] = x0;

  Multivector fx = s.F->evaluate_real(x0);
  Bitensor t = stress_tensor_explicit(fx);
  Bitensor t_def = stress_tensor_def(fx);
  double scale = std::max(1.0, t.max_abs());
  report["T"] = to_json(t);
  report["routes_max_diff"] = gate.check("stress_tensor_routes", (t - t_def).max_abs() / scale);
  report["trace"] = trace(t);
  report["trace_formula"] = trace_formula(fx);
  gate.check("trace_law", std::abs(trace(t) - trace_formula(fx)) / scale);

  MultivectorField j = s.J ? *s.J : MultivectorField::zero(sig, s.r - 1);
  report["force"] = to_json(lorentz_force(fx, j.evaluate_real(x0)));

  auto pts = sample_points(s);
  double cons = 0, odot_res = 0, owedge_res = 0, combined = 0;
  for (const auto& x : pts) {
    cons = std::max(cons, conservation_residual(*s.F, j, x).max_abs());
    auto ti = tensor_identity_check(*s.F, x);
    odot_res = std::max(odot_res, ti.odot);
    owedge_res = std::max(owedge_res, ti.owedge);
    combined = std::max(combined, ti.combined);
  }
  report["conservation_residual_max"] = gate.check("conservation", cons);
  report["tensor_identity"] = {{"odot_max", odot_res}, {"owedge_max", owedge_res},
                               {"combined_max", gate.check("tensor_identity_combined", combined)}};

  if (s.slice) {
    SliceOptions so{s.slice->quadrature, s.slice->bounds};
    report["flux_direct"] = to_json(flux_T_direct(*s.F, s.slice->axis, s.slice->position, so));
    report["slice"] = {{"axis", s.slice->axis}, {"position", s.slice->position}};
  }
  std::ostringstream title;
  title << "stress-energy " << sig.str() << " r=" << s.r;
  CommandResult out = finish(report, gate, title.str());
  out.summary += "\n  trace " + fmt(trace(t)) + ", conservation residual " + fmt(cons);
  return out;
}

CommandResult cmd_flux_compare(const RunConfig& cfg) {
  Scenario s = scenario_for(cfg);
  if (!s.spectrum) throw ConfigError("flux-compare needs a \"spectrum\" section");
  if (!s.slice) throw ConfigError("flux-compare needs a \"slice\" section");
  if (s.slice->bounds.empty()) throw ConfigError("flux-compare needs explicit slice bounds");
  OnConeSpectrum sp(s.signature, s.slice->axis, s.spectrum->bumps);
  if (sp.potential_grade() != s.r - 1) throw ConfigError("bump amplitudes must have grade r-1");

  FourierFluxOptions fo;
  fo.quadrature = s.spectrum->frequency_quadrature;
  fo.support_radius = s.spectrum->support_radius;
  Multivector fourier = flux_T_fourier(sp, fo);

  MultivectorField a = sp.synthesize_potential(fo.quadrature, fo.support_radius);
  MultivectorField f = field_from_potential(a);
  SliceOptions so{s.slice->quadrature, s.slice->bounds};
  Multivector direct = flux_T_direct(f, s.slice->axis, s.slice->position, so);

  double denom = std::max(direct.max_abs(), fourier.max_abs());
  double rel = denom > 0 ? max_abs_diff(direct, fourier) / denom : 0.0;
  Gate gate(s.tol);
  json report = header("flux-compare", s);
  report["slice"] = {{"axis", s.slice->axis},
                     {"position", s.slice->position},
                     {"points", s.slice->quadrature.points},
                     {"panels", s.slice->quadrature.panels}};
  report["frequency_quadrature"] = {{"points", fo.quadrature.points}, {"panels", fo.quadrature.panels}};
  report["modes"] = a.terms().size();
  report["flux_direct"] = to_json(direct);
  report["flux_fourier"] = to_json(fourier);
  report["flux_rel_err"] = gate.check("flux_rel_err", rel);
  CommandResult out = finish(report, gate, "flux-compare " + s.signature.str() + " r=" + std::to_string(s.r));
  out.summary += "\n  relative difference " + fmt(rel);
  return out;
}

namespace {

struct ClassicalDemo {
  unsigned long long seed = 0;
  int configurations = 5;
  int sample_points = 8;
  double tol = 1e-9;
};

ClassicalDemo classical_demo(const RunConfig& cfg) {
  ClassicalDemo demo;
  if (!cfg.config_path.empty()) {
    std::ifstream in(cfg.config_path);
    if (!in) throw ConfigError("cannot open " + cfg.config_path);
    json j;
    try {
      j = json::parse(in);
      demo.seed = j.value("seed", demo.seed);
      demo.configurations = j.value("configurations", demo.configurations);
      demo.sample_points = j.value("sample_points", demo.sample_points);
      demo.tol = j.value("tol", demo.tol);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("invalid classical demo config: ") + e.what());
    }
  }
  if (cfg.seed) demo.seed = *cfg.seed;
  if (cfg.tol) demo.tol = *cfg.tol;
  if (demo.configurations < 1 || demo.sample_points < 1)
    throw ConfigError("configurations and sample_points must be positive");
  return demo;
}

json residuals_json(const ClassicalResiduals& r) {
  return {{"gauss", r.gauss}, {"faraday", r.faraday}, {"gauss_magnetic", r.gauss_magnetic}, {"ampere", r.ampere}};
}

double scalar_at(const MultivectorField& f, const Point& x) { return f.evaluate_real(x).coefficient(Blade()); }

}  // namespace

CommandResult cmd_classical(const RunConfig& cfg) {
  ClassicalDemo demo = classical_demo(cfg);
  Rng rng(demo.seed);
  const Signature sig(1, 3);
  Gate gate(demo.tol);
  json configs = json::array();
  double eq_diff = 0, energy = 0, poynting = 0, force = 0;
  for (int c = 0; c < demo.configurations; ++c) {
    ClassicalFields cf = random_classical(rng);
    MaxwellSystem sys = classical_pack(cf);
    json points = json::array();
    for (int p = 0; p < demo.sample_points; ++p) {
      Point x = random_point(rng, sig);
      ClassicalResiduals vec = classical_residuals(cf, x);
      ClassicalResiduals mv = classical_residuals_from(maxwell_residuals(sys, x));
      double diff = max_abs_diff(vec, mv);
      eq_diff = std::max(eq_diff, diff);

      std::array<double, 3> e, b, jv;
      for (int i = 0; i < 3; ++i) {
        e[i] = scalar_at(cf.E[i], x);
        b[i] = scalar_at(cf.B[i], x);
        jv[i] = scalar_at(cf.j[i], x);
      }
      double rho = scalar_at(cf.rho, x);
      Multivector fx = classical_pack_point(e, b);
      Bitensor t = stress_tensor_explicit(fx);
      double u = 0.5 * (e[0] * e[0] + e[1] * e[1] + e[2] * e[2] + b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
      std::array<double, 3> s = {e[1] * b[2] - e[2] * b[1], e[2] * b[0] - e[0] * b[2], e[0] * b[1] - e[1] * b[0]};
      energy = std::max(energy, std::abs(t(0, 0) - u));
      for (int i = 0; i < 3; ++i) poynting = std::max(poynting, std::abs(t(0, i + 1) - s[i]));

      // f = J _| F against (j.E) e_0 + (rho E + j x B)
      Multivector jx = Multivector::vector(sig, {rho, jv[0], jv[1], jv[2]});
      Multivector fl = lorentz_force(fx, jx);
      std::array<double, 3> jxb = {jv[1] * b[2] - jv[2] * b[1], jv[2] * b[0] - jv[0] * b[2], jv[0] * b[1] - jv[1] * b[0]};
      double f_err = std::abs(fl.coefficient({0}) - (jv[0] * e[0] + jv[1] * e[1] + jv[2] * e[2]));
      for (int i = 0; i < 3; ++i) f_err = std::max(f_err, std::abs(fl.coefficient({i + 1}) - (rho * e[i] + jxb[i])));
      force = std::max(force, f_err);

      points.push_back({{"x", x}, {"vector_calculus", residuals_json(vec)}, {"multivector", residuals_json(mv)},
                        {"max_abs_diff", diff}});
    }
    configs.push_back({{"index", c}, {"points", points}});
  }
  json report;
  report["command"] = "classical";
  report["seed"] = demo.seed;
  report["tol"] = demo.tol;
  report["configurations"] = configs;
  report["equations_max_diff"] = gate.check("maxwell_equations", eq_diff);
  report["energy_density_max_err"] = gate.check("energy_density", energy);
  report["poynting_max_err"] = gate.check("poynting", poynting);
  report["lorentz_force_max_err"] = gate.check("lorentz_force", force);
  CommandResult out = finish(report, gate, "classical");
  out.summary += "\n  " + std::to_string(demo.configurations) + " configurations, equation residual mismatch " +
                 fmt(eq_diff);
  return out;
}

CommandResult run(const RunConfig& cfg) {
  try {
    if (cfg.command == "verify-identities") return cmd_verify_identities(cfg);
    if (cfg.command == "maxwell-check") return cmd_maxwell_check(cfg);
    if (cfg.command == "stress-energy") return cmd_stress_energy(cfg);
    if (cfg.command == "flux-compare") return cmd_flux_compare(cfg);
    if (cfg.command == "classical") return cmd_classical(cfg);
    throw ConfigError("unknown command \"" + cfg.command + "\"");
  } catch (const ConfigError& e) {
    return {json(), kUsageError, std::string("error: ") + e.what()};
  } catch (const std::domain_error& e) {
    return {json(), kUsageError, std::string("error: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    return {json(), kUsageError, std::string("error: ") + e.what()};
  }
}

}  // namespace extmax::cli

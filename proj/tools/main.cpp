#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using extmax::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Exterior-algebra Maxwell toolkit: identity sweeps, field checks and stress-energy reports"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig cfg;
  double tol = 0;
  unsigned long long seed = 0;
  int kmax = 0, nmax = 0, points = 0;
  auto* tol_opt = app.add_option("--tol", tol, "Residual tolerance (overrides the scenario)");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized sampling (overrides the scenario)");
  auto* kmax_opt = app.add_option("--kmax", kmax, "Largest number of time axes in the identity sweep");
  auto* nmax_opt = app.add_option("--nmax", nmax, "Largest number of space axes in the identity sweep");
  auto* points_opt = app.add_option("--points", points, "Quadrature nodes per axis");
  app.add_option("--config", cfg.config_path, "Scenario JSON file");
  app.add_option("--out", cfg.out_path, "Write the JSON report here instead of stdout");
  app.add_option("--cap", cfg.cap, "Largest k+n in the identity sweep")->capture_default_str();
  app.add_flag("--inject-sign-flip", cfg.inject_sign_flip, "Corrupt one sign in the identity suite")->group("");

  for (const char* name : {"verify-identities", "maxwell-check", "stress-energy", "flux-compare", "classical"}) {
    app.add_subcommand(name, "")->callback([&cfg, name] { cfg.command = name; });
  }
  app.get_subcommand("verify-identities")->description("Exhaustive algebraic identity sweep over (k,n)");
  app.get_subcommand("maxwell-check")->description("Maxwell residuals of a scenario (differential, integral, fourier, gauge)");
  app.get_subcommand("stress-energy")->description("Stress tensor, trace, force and conservation of a scenario");
  app.get_subcommand("flux-compare")->description("Slice flux of T by direct quadrature and from the on-cone spectrum");
  app.get_subcommand("classical")->description("Classical (E, B) reduction demo in (1,3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : extmax::cli::kUsageError;
  }
  if (*tol_opt) cfg.tol = tol;
  if (*seed_opt) cfg.seed = seed;
  if (*kmax_opt) cfg.kmax = kmax;
  if (*nmax_opt) cfg.nmax = nmax;
  if (*points_opt) cfg.points = points;

  auto result = extmax::cli::run(cfg);
  if (!result.report.is_null()) {
    std::string text = result.report.dump(2) + "\n";
    if (cfg.out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << cfg.out_path << "\n";
        return extmax::cli::kUsageError;
      }
      out << text;
    }
  }
  std::cerr << result.summary << "\n";
  return result.exit_code;
}

#pragma once

#include <optional>
#include <string>

#include "extmax/serialization.hpp"

namespace extmax::cli {

enum ExitCode { kPass = 0, kNumericalFailure = 1, kUsageError = 2 };

struct RunConfig {
  std::string command;
  std::string config_path;
  std::string out_path;
  std::optional<double> tol;
  std::optional<unsigned long long> seed;
  std::optional<int> kmax;
  std::optional<int> nmax;
  std::optional<int> points;
  int cap = 6;
  bool inject_sign_flip = false;
};

struct CommandResult {
  json report;
  int exit_code = kPass;
  std::string summary;
};

// Hard ceiling on k+n for the identity sweep.
inline constexpr int kMaxCap = 8;

CommandResult cmd_verify_identities(const RunConfig& cfg);
CommandResult cmd_maxwell_check(const RunConfig& cfg);
CommandResult cmd_stress_energy(const RunConfig& cfg);
CommandResult cmd_flux_compare(const RunConfig& cfg);
CommandResult cmd_classical(const RunConfig& cfg);

// Dispatches on cfg.command; config and domain errors become exit code 2.
CommandResult run(const RunConfig& cfg);

}  // namespace extmax::cli

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace zigzag {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kBernoulliConvention = "B_1 = -1/2";

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  int max_index = -1;  // -1 selects the per-command default
  std::string oracle = "entringer";
  std::vector<long> primes = {3, 5, 7};
  std::vector<long> moduli = {2, 3};
  double rel_tol = 1e-12;
  int nodes = 128;
  double radius = 1.0;
  std::string format = "json";  // json | csv | human
  std::string output_path;      // empty = stdout
  bool check = false;
  // Positional arguments of the quadrature command: an operation name plus
  // up to two operation-specific arguments (parity/kernel, index).
  std::string quad_op;
  std::string quad_arg1;
  std::string quad_arg2;
};

struct LedgerRow {
  std::string formula_id;
  std::string status;  // verified | mismatch | calibrated | unverifiable
  std::string evidence;
};

// The frozen verdict per claimed formula, fixed by the certification runs
// that this repository's tests reproduce.  `verify` recomputes every row and
// exits nonzero iff a frozen-verified row regresses.
const std::vector<LedgerRow>& frozen_ledger();

struct CommandOutcome {
  Json envelope;         // full report (always built, even for csv/human)
  std::string rendered;  // exact bytes to emit
  int exit_code = 0;
};

CommandOutcome cmd_compute(const RunConfig& cfg);
CommandOutcome cmd_verify(const RunConfig& cfg);
CommandOutcome cmd_congruence(const RunConfig& cfg);
CommandOutcome cmd_period(const RunConfig& cfg);
CommandOutcome cmd_quadrature(const RunConfig& cfg);
CommandOutcome cmd_asymptotics(const RunConfig& cfg);

// Dispatches on cfg.command.  Throws ContractError for invalid input; the
// CLI maps that to exit code 2.
CommandOutcome run_command(const RunConfig& cfg);

// Deterministic 17-significant-digit rendering used in CSV payloads.
std::string format_double(double v);

}  // namespace zigzag

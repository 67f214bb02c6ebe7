#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace hilfer::commands {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNegative = 2;
inline constexpr int kExitNonConvergence = 3;

/// Solver settings given on the command line; each one overrides the problem file.
struct SolverOverrides {
  std::optional<int> grid_n;
  std::optional<int> rule_order;
  std::optional<double> tol;
  std::optional<int> max_iter;
  bool uniform_mesh = false;
  bool linear_interp = false;
};

struct AnalyzeOptions {
  std::filesystem::path problem;
  bool json = false;
};

struct SolveOptions {
  std::filesystem::path problem;
  SolverOverrides solver;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> history_out;
  bool json = false;
};

struct StabilityOptions {
  std::filesystem::path problem;
  SolverOverrides solver;
  std::vector<double> epsilons{1e-3, 1e-2};
  std::optional<std::filesystem::path> out;
  bool json = false;
};

struct VerifyOptions {
  double delta_tol = 1e-7;    // absolute
  double omega_tol = 1e-5;    // relative
  double lambda_tol = 1e-5;   // relative
  double l_omega_tol = 1e-5;  // relative
  double l_lambda_tol = 1e-5; // relative
  bool quiet = false;
};

struct SelftestOptions {
  int rule_order = 40;
  bool quiet = false;
};

// Each command writes its report to `out`, diagnostics to `err`, and returns the exit code.
int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_stability(const StabilityOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify_example(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_selftest(const SelftestOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace hilfer::commands

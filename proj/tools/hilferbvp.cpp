#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hilfer/commands.hpp"
#include "hilfer/errors.hpp"

namespace cmd = hilfer::commands;

namespace {

void add_solver_flags(CLI::App* app, cmd::SolverOverrides& s) {
  app->add_option("--grid-n", s.grid_n, "Number of mesh intervals")->check(CLI::Range(3, 1000000));
  app->add_option("--rule-order", s.rule_order, "Gauss-Jacobi nodes per integral")->check(CLI::Range(1, 2000));
  app->add_option("--tol", s.tol, "Picard tolerance on successive differences")->check(CLI::PositiveNumber);
  app->add_option("--max-iter", s.max_iter, "Picard iteration limit")->check(CLI::Range(1, 1000000));
  app->add_flag("--uniform-mesh", s.uniform_mesh, "Use a uniform mesh instead of the graded one");
  app->add_flag("--linear-interp", s.linear_interp, "Interpolate iterates linearly instead of monotone cubic");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilfer fractional boundary value problems with Erdelyi-Kober boundary conditions"};
  app.set_version_flag("--version", std::string(HILFER_VERSION));
  app.require_subcommand(1);

  cmd::AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Compute Delta, Omega, Lambda and the well-posedness verdicts");
  a->add_option("problem", analyze.problem, "Problem file (JSON)")->required();
  bool text_mode = false;
  auto* json_flag = a->add_flag("--json", analyze.json, "Emit the JSON report");
  a->add_flag("--text", text_mode, "Emit a readable table (default)")->excludes(json_flag);

  cmd::SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Solve by Picard iteration and write the solution CSV");
  s->add_option("problem", solve.problem, "Problem file (JSON)")->required();
  s->add_option("--out", solve.out, "Solution CSV (t,x)");
  s->add_option("--history-out", solve.history_out, "Iteration history CSV (iteration,diff)");
  s->add_flag("--json", solve.json, "Emit the JSON report");
  add_solver_flags(s, solve.solver);

  cmd::StabilityOptions stab;
  auto* st = app.add_subcommand("stability", "Ulam-Hyers perturbation experiment");
  st->add_option("problem", stab.problem, "Problem file (JSON)")->required();
  st->add_option("--eps", stab.epsilons, "Perturbation sizes")->delimiter(',')->capture_default_str();
  st->add_option("--out", stab.out, "Report JSON");
  st->add_flag("--json", stab.json, "Emit the JSON report on standard output");
  add_solver_flags(st, stab.solver);

  cmd::VerifyOptions verify;
  auto* v = app.add_subcommand("verify-example", "Recompute the worked example constants");
  v->add_option("--delta-tol", verify.delta_tol, "Absolute tolerance on Delta")->capture_default_str();
  v->add_option("--omega-tol", verify.omega_tol, "Relative tolerance on Omega")->capture_default_str();
  v->add_option("--lambda-tol", verify.lambda_tol, "Relative tolerance on Lambda")->capture_default_str();
  v->add_option("--lomega-tol", verify.l_omega_tol, "Relative tolerance on L*Omega")->capture_default_str();
  v->add_option("--llambda-tol", verify.l_lambda_tol, "Relative tolerance on L*Lambda")->capture_default_str();
  v->add_flag("--quiet", verify.quiet, "Exit code only");

  cmd::SelftestOptions self;
  auto* t = app.add_subcommand("selftest", "Operator identity checks");
  t->add_option("--rule-order", self.rule_order, "Gauss-Jacobi nodes per integral")->capture_default_str();
  t->add_flag("--quiet", self.quiet, "Exit code only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cmd::kExitInput;
  }

  try {
    if (*a) return cmd::cmd_analyze(analyze, std::cout, std::cerr);
    if (*s) return cmd::cmd_solve(solve, std::cout, std::cerr);
    if (*st) return cmd::cmd_stability(stab, std::cout, std::cerr);
    if (*v) return cmd::cmd_verify_example(verify, std::cout, std::cerr);
    if (*t) return cmd::cmd_selftest(self, std::cout, std::cerr);
  } catch (const hilfer::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cmd::kExitInput;
  }
  return cmd::kExitInput;
}

#include "hilfer/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <ostream>
#include <string>

#include "hilfer/errors.hpp"
#include "hilfer/problem_io.hpp"
#include "hilfer/reference.hpp"
#include "hilfer/selftest.hpp"
#include "hilfer/stability.hpp"

namespace hilfer::commands {

namespace {

constexpr std::size_t kHistoryTail = 10;

std::string num(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : std::string("n/a"); }

picard::SolverOptions resolve(picard::SolverOptions base, const SolverOverrides& o) {
  if (o.grid_n) base.grid_n = *o.grid_n;
  if (o.rule_order) base.rule_order = *o.rule_order;
  if (o.tol) base.tol = *o.tol;
  if (o.max_iter) base.max_iter = *o.max_iter;
  if (o.uniform_mesh) base.uniform_mesh = true;
  if (o.linear_interp) base.interpolation = grid::Interpolation::Linear;
  if (base.grid_n < 3) throw InputError("grid_n must be at least 3");
  if (base.rule_order < 1) throw InputError("rule_order must be positive");
  if (!(base.tol > 0.0)) throw InputError("tol must be positive");
  if (base.max_iter < 1) throw InputError("max_iter must be positive");
  return base;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path.string());
  f << content;
}

void print_analysis_text(const wellposed::ProblemSpec& spec, const wellposed::WellPosednessReport& r,
                         std::ostream& out) {
  out << "problem: " << (spec.label.empty() ? "(unnamed)" : spec.label) << "\n";
  auto row = [&](const char* name, const std::string& value) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "  %-8s %s\n", name, value.c_str());
    out << buf;
  };
  row("gamma", num(r.gamma));
  row("Delta", num(r.delta_const));
  row("Omega", opt_num(r.omega));
  row("Lambda", opt_num(r.lambda_const));
  row("L", num(spec.bounds.lipschitz_L));
  row("L*Omega", opt_num(r.l_omega));
  row("L*Lambda", opt_num(r.l_lambda));
  row("r", opt_num(r.radius_r));
  row("r*", opt_num(r.radius_r_star));
  row("C_f", opt_num(r.ulam_hyers_Cf));
  out << "uniqueness (L*Omega < 1): " << (r.verdict_unique ? "yes" : "no") << "\n";
  out << "existence (L*Lambda < 1 with psi bound): " << (r.verdict_exists ? "yes" : "no") << "\n";
  if (r.resonant) out << "resonant: Delta = 0, the boundary problem is degenerate\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  for (const auto& e : r.errors) out << "error: " << e << "\n";
}

void print_history_tail(const std::vector<double>& history, std::ostream& err) {
  const std::size_t start = history.size() > kHistoryTail ? history.size() - kHistoryTail : 0;
  err << "last successive differences:";
  for (std::size_t k = start; k < history.size(); ++k) {
    err << " " << num(history[k], 6);
  }
  err << "\n";
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto loaded = io::load_problem(opts.problem);
    const auto report = wellposed::analyze(loaded.spec);
    if (opts.json) {
      auto doc = io::report_skeleton(loaded.spec, loaded.solver);
      doc["analysis"] = io::analysis_json(report, loaded.spec.bounds);
      out << doc.dump(2) << "\n";
    } else {
      print_analysis_text(loaded.spec, report, out);
      for (const auto& n : loaded.notes) out << "note: " << n << "\n";
    }
    return report.verdict_unique ? kExitOk : kExitNegative;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  std::optional<io::LoadedProblem> loaded;
  picard::SolverOptions solver;
  try {
    loaded.emplace(io::load_problem(opts.problem));
    solver = resolve(loaded->solver, opts.solver);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  const auto& spec = loaded->spec;

  std::optional<picard::SolveResult> result;
  try {
    result.emplace(picard::picard_solve(spec, solver));
  } catch (const DegenerateProblem& e) {
    err << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << "\n";
    print_history_tail(e.diff_history(), err);
    return kExitNonConvergence;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (opts.out) {
      std::ostringstream csv;
      io::write_solution_csv(csv, result->solution);
      write_text_file(*opts.out, csv.str());
    }
    if (opts.history_out) {
      std::ostringstream csv;
      io::write_history_csv(csv, result->diff_history);
      write_text_file(*opts.history_out, csv.str());
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const bool ok = result->converged && result->final_residual <= 10.0 * solver.tol &&
                  result->boundary_residual <= 10.0 * solver.tol;
  if (opts.json) {
    auto doc = io::report_skeleton(spec, solver);
    doc["analysis"] = io::analysis_json(wellposed::analyze(spec), spec.bounds);
    doc["solve"] = io::solve_json(*result);
    out << doc.dump(2) << "\n";
  } else {
    out << "iterations: " << result->iterations << "\n";
    out << "converged: " << (result->converged ? "yes" : "no") << "\n";
    out << "final_residual: " << num(result->final_residual, 6) << "\n";
    out << "boundary_residual: " << num(result->boundary_residual, 6) << "\n";
    out << "sup |x|: " << num(grid::sup_norm(result->solution), 10) << "\n";
    out << "certified by contraction: " << (result->certified ? "yes" : "no") << "\n";
  }
  if (!ok) {
    err << "error: residuals exceed 10*tol after " << result->iterations << " iterations\n";
    print_history_tail(result->diff_history, err);
    return kExitNonConvergence;
  }
  return kExitOk;
}

int cmd_stability(const StabilityOptions& opts, std::ostream& out, std::ostream& err) {
  std::optional<io::LoadedProblem> loaded;
  picard::SolverOptions solver;
  try {
    loaded.emplace(io::load_problem(opts.problem));
    solver = resolve(loaded->solver, opts.solver);
    if (opts.epsilons.empty()) throw InputError("at least one epsilon is required");
    for (double eps : opts.epsilons) {
      if (!(eps > 0.0) || !std::isfinite(eps)) throw InputError("epsilon must be positive");
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  const auto& spec = loaded->spec;

  std::optional<stability::UhExperiment> experiment;
  try {
    experiment.emplace(stability::uh_experiment(spec, opts.epsilons,
                                                stability::default_g_family(spec.linear.t_max()), solver));
  } catch (const DegenerateProblem& e) {
    err << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const NonConvergence& e) {
    err << "error: base problem: " << e.what() << "\n";
    print_history_tail(e.diff_history(), err);
    return kExitNonConvergence;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  auto doc = io::report_skeleton(spec, solver);
  doc["analysis"] = io::analysis_json(wellposed::analyze(spec), spec.bounds);
  doc["solve"] = io::solve_json(*experiment->base);
  doc["stability"] = io::stability_json(*experiment);
  try {
    if (opts.out) write_text_file(*opts.out, doc.dump(2) + "\n");
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  bool all_hold = true;
  if (opts.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "C_f = " << num(experiment->ulam_hyers_Cf) << ", Omega = " << num(experiment->omega) << "\n";
    char buf[200];
    std::snprintf(buf, sizeof buf, "%-10s %-10s %-14s %-14s %-6s %-14s %-14s %-6s\n", "epsilon", "g", "deviation",
                  "C_f*eps", "bound", "|y-Fy|", "Omega*eps", "resid");
    out << buf;
    for (const auto& r : experiment->reports) {
      std::snprintf(buf, sizeof buf, "%-10.3g %-10s %-14.6g %-14.6g %-6s %-14.6g %-14.6g %-6s\n", r.epsilon,
                    r.g_label.c_str(), r.deviation, r.cf_bound, r.bound_holds ? "ok" : "FAIL", r.residual_bound_lhs,
                    r.omega_eps, r.residual_bound_holds ? "ok" : "FAIL");
      out << buf;
    }
    for (const auto& w : experiment->warnings) out << "warning: " << w << "\n";
    out << "finite perturbation family: no counterexample found does not prove the bound\n";
  }
  for (const auto& r : experiment->reports) {
    if (!r.bound_holds) {
      all_hold = false;
      err << "bound violated: epsilon=" << num(r.epsilon, 6) << " g=" << r.g_label
          << " deviation=" << num(r.deviation, 6) << " C_f*eps=" << num(r.cf_bound, 6) << "\n";
    }
  }
  if (experiment->reports.empty()) {
    err << "error: every perturbed solve failed to converge\n";
    return kExitNonConvergence;
  }
  return all_hold ? kExitOk : kExitNegative;
}

int cmd_verify_example(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  const auto spec = reference::worked_example();
  const reference::PublishedConstants published;
  const auto r = wellposed::analyze(spec);
  (void)err;

  struct Row {
    const char* name;
    double computed;
    double published;
    double error;
    double tol;
    const char* kind;
    bool pass;
  };
  auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
  auto value = [](const std::optional<double>& v) { return v.value_or(std::nan("")); };
  std::vector<Row> rows;
  const double gamma_err = std::abs(r.gamma - published.gamma);
  rows.push_back({"gamma", r.gamma, published.gamma, gamma_err, 4.0 * std::numeric_limits<double>::epsilon(), "abs",
                  false});
  rows.push_back({"Delta", r.delta_const, published.delta, std::abs(r.delta_const - published.delta), opts.delta_tol, "abs",
                  false});
  rows.push_back({"Omega", value(r.omega), published.omega, rel(value(r.omega), published.omega), opts.omega_tol, "rel",
                  false});
  rows.push_back({"Lambda", value(r.lambda_const), published.lambda, rel(value(r.lambda_const), published.lambda),
                  opts.lambda_tol, "rel", false});
  rows.push_back({"L*Omega", value(r.l_omega), published.l_omega, rel(value(r.l_omega), published.l_omega), opts.l_omega_tol,
                  "rel", false});
  rows.push_back({"L*Lambda", value(r.l_lambda), published.l_lambda, rel(value(r.l_lambda), published.l_lambda),
                  opts.l_lambda_tol, "rel", false});

  bool all = true;
  for (auto& row : rows) {
    row.pass = row.error <= row.tol;
    all = all && row.pass;
  }
  if (!opts.quiet) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "%-9s %-22s %-22s %-12s %-12s %s\n", "quantity", "computed", "published", "error",
                  "tolerance", "result");
    out << buf;
    for (const auto& row : rows) {
      std::snprintf(buf, sizeof buf, "%-9s %-22.15g %-22.12g %-12.3e %-8.1e %s %s\n", row.name, row.computed,
                    row.published, row.error, row.tol, row.kind, row.pass ? "PASS" : "FAIL");
      out << buf;
    }
    out << (all ? "all constants reproduced\n" : "mismatch against the published constants\n");
  }
  return all ? kExitOk : kExitNegative;
}

int cmd_selftest(const SelftestOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.rule_order < 1) {
    err << "error: rule_order must be positive\n";
    return kExitInput;
  }
  const auto checks = selftest::run_all(opts.rule_order);
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.passed) ++failed;
    if (!opts.quiet) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "%-4s %-18s %-36s rel.err %.2e (tol %.0e)\n", c.passed ? "ok" : "FAIL",
                    c.suite.c_str(), c.name.c_str(), c.rel_error, c.tolerance);
      out << buf;
    }
  }
  if (!opts.quiet) {
    out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  }
  return failed == 0 ? kExitOk : kExitNegative;
}

}  // namespace hilfer::commands

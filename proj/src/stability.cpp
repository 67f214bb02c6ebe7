#include "hilfer/stability.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "hilfer/errors.hpp"

namespace hilfer::stability {

using exprlang::BinaryOp;
using exprlang::ExprTree;
using exprlang::Variable;

void PerturbationSpec::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be positive");
  }
  if (g.uses(Variable::X)) {
    throw DomainError("perturbation g may depend on t only");
  }
  if (g_sup > epsilon) {
    throw DomainError("perturbation sup |g| exceeds epsilon");
  }
}

picard::SolveResult perturbed_solve(const wellposed::ProblemSpec& spec, const PerturbationSpec& pert,
                                    const picard::SolverOptions& options) {
  pert.validate();
  wellposed::ProblemSpec perturbed = spec;
  perturbed.rhs = ExprTree::binary(BinaryOp::Add, spec.rhs, pert.g);
  perturbed.rhs_text = "(" + spec.rhs_text + ") + " + pert.g.unparse();
  return picard::picard_solve(perturbed, options);
}

std::vector<std::pair<std::string, ExprTree>> default_g_family(double t_max) {
  const ExprTree t = ExprTree::variable(Variable::T);
  return {
      {"cos(t)", ExprTree::unary(exprlang::UnaryOp::Cos, t)},
      {"1", ExprTree::constant(1.0)},
      {"t/t_max", ExprTree::binary(BinaryOp::Div, t, ExprTree::constant(t_max))},
      {"sin(3t)",
       ExprTree::unary(exprlang::UnaryOp::Sin, ExprTree::binary(BinaryOp::Mul, ExprTree::constant(3.0), t))},
  };
}

PerturbationSpec scaled_perturbation(const ExprTree& g, std::string label, double epsilon, double t_max,
                                     int grid_n) {
  if (g.uses(Variable::X)) {
    throw DomainError("perturbation g may depend on t only");
  }
  const int samples = std::max(2, 10 * grid_n);
  const double sup = exprlang::sampled_sup_in_t(g, t_max, samples);
  PerturbationSpec pert;
  pert.epsilon = epsilon;
  pert.label = std::move(label);
  if (sup == 0.0) {
    pert.g = ExprTree::constant(0.0);
    pert.g_sup = 0.0;
    return pert;
  }
  const double scale = epsilon / (1.01 * sup);
  pert.g = ExprTree::binary(BinaryOp::Mul, ExprTree::constant(scale), g);
  pert.g_sup = scale * sup;
  return pert;
}

UhExperiment uh_experiment(const wellposed::ProblemSpec& spec, const std::vector<double>& epsilons,
                           const std::vector<std::pair<std::string, ExprTree>>& g_family,
                           const picard::SolverOptions& options) {
  const auto analysis = wellposed::analyze(spec);
  if (!analysis.ulam_hyers_Cf) {
    throw DomainError("C_f undefined: LΩ ≥ 1");
  }
  for (double eps : epsilons) {
    if (!(eps > 0.0)) {
      throw DomainError("epsilon must be positive");
    }
  }

  UhExperiment out;
  out.ulam_hyers_Cf = *analysis.ulam_hyers_Cf;
  out.omega = *analysis.omega;
  out.base.emplace(picard::picard_solve(spec, options));
  if (!out.base->converged) {
    out.warnings.push_back("base problem did not reach the tolerance; deviations include its error");
  }

  const double T = spec.linear.horizon_T;
  const double t_max = spec.linear.t_max();
  const picard::FixedPointMap F(spec, options.rule_order);

  for (double eps : epsilons) {
    for (const auto& [label, g] : g_family) {
      const PerturbationSpec pert = scaled_perturbation(g, label, eps, t_max, options.grid_n);
      std::optional<picard::SolveResult> y;
      try {
        y.emplace(perturbed_solve(spec, pert, options));
      } catch (const NonConvergence& e) {
        std::ostringstream os;
        os << "skipped eps=" << eps << ", g=" << label << ": " << e.what();
        out.warnings.push_back(os.str());
        ++out.skipped;
        continue;
      }
      StabilityReport rep;
      rep.epsilon = eps;
      rep.g_label = label;
      rep.deviation = grid::sup_distance(y->solution, out.base->solution, T);
      rep.cf_bound = out.ulam_hyers_Cf * eps;
      rep.bound_holds = rep.deviation <= rep.cf_bound;
      rep.omega_eps = out.omega * eps;
      rep.residual_bound_lhs = grid::sup_distance(y->solution, F.apply(y->solution), T);
      rep.residual_bound_holds = rep.residual_bound_lhs <= rep.omega_eps + kResidualBoundSlack;
      rep.tightness = rep.deviation / rep.cf_bound;
      rep.perturbed_iterations = y->iterations;
      out.reports.push_back(rep);
    }
  }
  return out;
}

}  // namespace hilfer::stability

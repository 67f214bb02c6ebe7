#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilfer/exprlang.hpp"
#include "hilfer/fracops.hpp"

namespace hilfer::wellposed {

using fracops::BoundaryTerm;

/// The linear part of the boundary value problem: orders, horizon and the
/// nonlocal Erdelyi-Kober boundary terms.
struct LinearProblem {
  double alpha = 1.5;
  double beta = 0.0;
  double horizon_T = 1.0;
  std::vector<BoundaryTerm> terms;

  /// Throws DomainError with a readable message ("alpha must be in (1,2)", ...).
  void validate() const;

  /// alpha + 2 beta - alpha beta.
  double gamma() const;

  /// max(T, max_i xi_i): every point where the integral representation is sampled.
  double t_max() const;
};

/// Full problem: linear part plus right-hand side f(t, x) and its constants.
struct ProblemSpec {
  std::string label;
  LinearProblem linear;
  exprlang::ExprTree rhs = exprlang::ExprTree::constant(0.0);
  std::string rhs_text = "0";
  std::optional<exprlang::ExprTree> psi;
  std::string psi_text;
  exprlang::RhsBounds bounds;

  void validate() const { linear.validate(); }
};

struct WellPosednessReport {
  double gamma = 0.0;
  double delta_const = 0.0;
  std::optional<double> omega;
  std::optional<double> lambda_const;
  std::optional<double> l_omega;
  std::optional<double> l_lambda;
  std::optional<double> radius_r;
  std::optional<double> radius_r_star;
  std::optional<double> ulam_hyers_Cf;
  bool resonant = false;
  bool verdict_unique = false;
  bool verdict_exists = false;
  std::vector<std::string> warnings;
  std::vector<std::string> errors;
};

/// alpha + 2 beta - alpha beta for alpha in (1,2), beta in [0,1]; lies in (1, 2].
double gamma_param(double alpha, double beta);

/// Boundary determinant
/// T^(g-1) - sum sigma_i xi_i^(g-1) Gamma(mu_i + (g-1)/eta_i + 1) / Gamma(mu_i + (g-1)/eta_i + delta_i + 1).
/// Throws GammaPoleError when a Gamma argument is not positive.
double compute_delta(const LinearProblem& problem);

/// True when |delta| < 1e-14 T^(gamma-1), i.e. the problem is resonant.
bool is_resonant(const LinearProblem& problem, double delta);

/// Sum_i |sigma_i| xi_i^alpha Gamma(alpha/eta_i + mu_i + 1) / Gamma(delta_i + alpha/eta_i + mu_i + 1).
double nonlocal_sum(const LinearProblem& problem);

/// Contraction constant of the full fixed-point map. Throws DegenerateProblem if resonant.
double compute_omega(const LinearProblem& problem);

/// Contraction constant of the nonlocal part alone (omega minus T^alpha / Gamma(alpha + 1)).
double compute_lambda(const LinearProblem& problem);

/// Assembles every constant and verdict. Per-constant failures are collected in
/// `errors` rather than thrown.
WellPosednessReport analyze(const ProblemSpec& spec);

}  // namespace hilfer::wellposed

#include "hilfer/wellposed.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "hilfer/errors.hpp"
#include "hilfer/specfun.hpp"

namespace hilfer::wellposed {

namespace {

constexpr double kResonanceRelTol = 1e-14;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

double omega_from_parts(const LinearProblem& p, double delta, double sum, bool with_local_term) {
  const double a = p.alpha;
  const double T = p.horizon_T;
  const double g = p.gamma();
  const double abs_delta = std::abs(delta);
  double bracket = std::pow(T, g + a - 1.0) / abs_delta + std::pow(T, g - 1.0) / abs_delta * sum;
  if (with_local_term) {
    bracket += std::pow(T, a);
  }
  return bracket / specfun::gamma(a + 1.0);
}

}  // namespace

void LinearProblem::validate() const {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw DomainError("alpha must be in (1,2), got " + fmt(alpha));
  }
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw DomainError("beta must be in [0,1], got " + fmt(beta));
  }
  if (!(horizon_T > 0.0) || !std::isfinite(horizon_T)) {
    throw DomainError("T must be positive, got " + fmt(horizon_T));
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    try {
      terms[i].validate();
    } catch (const DomainError& e) {
      throw DomainError("term " + std::to_string(i) + ": " + e.what());
    }
  }
}

double LinearProblem::gamma() const { return gamma_param(alpha, beta); }

double LinearProblem::t_max() const {
  double m = horizon_T;
  for (const auto& term : terms) {
    m = std::max(m, term.xi);
  }
  return m;
}

double gamma_param(double alpha, double beta) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw DomainError("alpha must be in (1,2), got " + fmt(alpha));
  }
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw DomainError("beta must be in [0,1], got " + fmt(beta));
  }
  return alpha + 2.0 * beta - alpha * beta;
}

double compute_delta(const LinearProblem& p) {
  const double g = p.gamma();
  double sum = 0.0;
  for (const auto& term : p.terms) {
    const double arg = term.mu + (g - 1.0) / term.eta + 1.0;
    sum += term.sigma * std::pow(term.xi, g - 1.0) * specfun::gamma_ratio(arg, arg + term.delta);
  }
  return std::pow(p.horizon_T, g - 1.0) - sum;
}

bool is_resonant(const LinearProblem& p, double delta) {
  return std::abs(delta) < kResonanceRelTol * std::pow(p.horizon_T, p.gamma() - 1.0);
}

double nonlocal_sum(const LinearProblem& p) {
  double sum = 0.0;
  for (const auto& term : p.terms) {
    const double arg = p.alpha / term.eta + term.mu + 1.0;
    sum += std::abs(term.sigma) * std::pow(term.xi, p.alpha) * specfun::gamma_ratio(arg, arg + term.delta);
  }
  return sum;
}

double compute_omega(const LinearProblem& p) {
  const double delta = compute_delta(p);
  if (is_resonant(p, delta)) {
    throw DegenerateProblem("boundary determinant vanishes (delta = " + fmt(delta) + ")");
  }
  return omega_from_parts(p, delta, nonlocal_sum(p), true);
}

double compute_lambda(const LinearProblem& p) {
  const double delta = compute_delta(p);
  if (is_resonant(p, delta)) {
    throw DegenerateProblem("boundary determinant vanishes (delta = " + fmt(delta) + ")");
  }
  return omega_from_parts(p, delta, nonlocal_sum(p), false);
}

WellPosednessReport analyze(const ProblemSpec& spec) {
  WellPosednessReport rep;
  const LinearProblem& p = spec.linear;
  try {
    p.validate();
  } catch (const Error& e) {
    rep.errors.push_back(e.what());
    return rep;
  }
  rep.gamma = p.gamma();

  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    if (p.terms[i].xi > p.horizon_T) {
      rep.warnings.push_back("term " + std::to_string(i) + ": xi = " + fmt(p.terms[i].xi) +
                             " exceeds T = " + fmt(p.horizon_T) +
                             "; the solution is extended to [0, " + fmt(p.t_max()) + "]");
    }
  }

  try {
    rep.delta_const = compute_delta(p);
  } catch (const Error& e) {
    rep.errors.push_back(std::string("delta: ") + e.what());
    return rep;
  }
  if (is_resonant(p, rep.delta_const)) {
    rep.resonant = true;
    rep.warnings.push_back("resonant boundary data (delta = 0): the integral representation does not exist");
    return rep;
  }

  double sum = 0.0;
  try {
    sum = nonlocal_sum(p);
  } catch (const Error& e) {
    rep.errors.push_back(std::string("omega: ") + e.what());
    return rep;
  }
  const double omega = omega_from_parts(p, rep.delta_const, sum, true);
  const double lambda = omega_from_parts(p, rep.delta_const, sum, false);
  rep.omega = omega;
  rep.lambda_const = lambda;

  const auto& b = spec.bounds;
  const double L = b.lipschitz_L;
  rep.l_omega = L * omega;
  rep.l_lambda = L * lambda;
  if (!b.lipschitz_user_supplied) {
    rep.warnings.push_back("L is a sampled estimate (lower bound on sup; user-supplied L takes precedence)");
  }
  if (!b.m_user_supplied) {
    rep.warnings.push_back("M is a sampled estimate (lower bound on sup; user-supplied M takes precedence)");
  }

  if (*rep.l_omega < 1.0) {
    rep.radius_r = b.m_const * omega / (1.0 - *rep.l_omega);
    rep.ulam_hyers_Cf = omega / (1.0 - *rep.l_omega);
    rep.verdict_unique = true;
  } else {
    rep.warnings.push_back("L*Omega >= 1: contraction not certified, C_f undefined");
  }

  if (b.psi_norm) {
    rep.radius_r_star = *b.psi_norm * omega;
    rep.verdict_exists = *rep.l_lambda < 1.0;
    if (!b.psi_user_supplied) {
      rep.warnings.push_back("||psi|| taken from a sampled bound function; it is only as good as psi itself");
    }
  } else {
    rep.warnings.push_back("growth bound unverifiable: no bound function psi supplied");
  }
  return rep;
}

}  // namespace hilfer::wellposed

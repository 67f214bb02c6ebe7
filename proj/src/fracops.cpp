#include "hilfer/fracops.hpp"

#include <cmath>
#include <string>

#include "hilfer/errors.hpp"
#include "hilfer/specfun.hpp"

namespace hilfer::fracops {

namespace {

// 1/Gamma(z) for z > -2, zero at the poles 0 and -1.
double reciprocal_gamma(double z) {
  if (z > 0.0) {
    return 1.0 / specfun::gamma(z);
  }
  if (z == 0.0 || z == -1.0) {
    return 0.0;
  }
  // Gamma(z) = Gamma(z + k) / (z (z+1) ... (z+k-1))
  double prod = 1.0;
  while (z <= 0.0) {
    prod *= z;
    z += 1.0;
  }
  return prod / specfun::gamma(z);
}

}  // namespace

void BoundaryTerm::validate() const {
  if (!std::isfinite(sigma)) {
    throw DomainError("boundary term sigma must be finite");
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw DomainError("boundary term eta must be positive, got " + std::to_string(eta));
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw DomainError("boundary term delta must be positive, got " + std::to_string(delta));
  }
  if (!(xi > 0.0) || !std::isfinite(xi)) {
    throw DomainError("boundary term xi must be positive, got " + std::to_string(xi));
  }
  if (!(mu > -1.0) || !std::isfinite(mu)) {
    throw DomainError("boundary term mu must exceed -1, got " + std::to_string(mu));
  }
}

double rl_monomial(double q, double alpha, double t) {
  if (!(q > -1.0)) {
    throw DomainError("rl_monomial needs q > -1, got " + std::to_string(q));
  }
  if (!(alpha > 0.0)) {
    throw DomainError("rl_monomial needs alpha > 0, got " + std::to_string(alpha));
  }
  if (!(t >= 0.0)) {
    throw DomainError("rl_monomial needs t >= 0, got " + std::to_string(t));
  }
  if (t == 0.0) {
    return 0.0;
  }
  return specfun::gamma_ratio(q + 1.0, q + alpha + 1.0) * std::pow(t, q + alpha);
}

double ek_monomial(double q, const BoundaryTerm& term) {
  const double arg = term.mu + q / term.eta + 1.0;
  if (!(arg > 0.0)) {
    throw DomainError("ek_monomial: mu + q/eta + 1 = " + std::to_string(arg) + " is not positive");
  }
  return std::pow(term.xi, q) * specfun::gamma_ratio(arg, arg + term.delta);
}

double hilfer_monomial(double q, double alpha, double beta, double t) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw DomainError("hilfer_monomial needs alpha in (1,2), got " + std::to_string(alpha));
  }
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw DomainError("hilfer_monomial needs beta in [0,1], got " + std::to_string(beta));
  }
  if (!(t > 0.0)) {
    throw DomainError("hilfer_monomial needs t > 0, got " + std::to_string(t));
  }
  if (!(q > -1.0)) {
    throw DomainError("hilfer_monomial needs q > -1, got " + std::to_string(q));
  }
  const double inner_power = q + (1.0 - beta) * (2.0 - alpha);
  // D^2 t^p vanishes identically for p in {0, 1}; compare with a relative slack
  // since p is assembled in floating point (q = gamma - 1 gives p = 1).
  constexpr double kSlack = 1e-12;
  if (std::abs(inner_power) <= kSlack || std::abs(inner_power - 1.0) <= kSlack) {
    return 0.0;
  }
  const double outer_order = beta * (2.0 - alpha);
  if (outer_order > 0.0 && !(inner_power > 1.0)) {
    throw DomainError("hilfer_monomial: t^(" + std::to_string(inner_power - 2.0) +
                      ") is not integrable under the outer fractional integral");
  }
  return specfun::gamma(q + 1.0) * reciprocal_gamma(q + 1.0 - alpha) * std::pow(t, q - alpha);
}

double ek_of(const std::function<double(double)>& fn, const BoundaryTerm& term, int rule_order) {
  term.validate();
  return singquad::ErdelyiKober(term.eta, term.mu, term.delta, rule_order)(fn, term.xi);
}

double ek_rl_composed(const std::function<double(double)>& fn, const BoundaryTerm& term, double alpha,
                      int rule_order) {
  return ComposedEkRl(term, alpha, rule_order)(fn);
}

ComposedEkRl::ComposedEkRl(const BoundaryTerm& term, double alpha, int rule_order)
    : xi_(term.xi),
      inner_(alpha, rule_order),
      outer_((term.validate(), term.eta), term.mu, term.delta, rule_order) {}

}  // namespace hilfer::fracops

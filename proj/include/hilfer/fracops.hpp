#pragma once

#include <functional>

#include "hilfer/singquad.hpp"

namespace hilfer::fracops {

/// One nonlocal boundary term sigma * I_eta^{mu,delta} x(xi).
struct BoundaryTerm {
  double sigma = 0.0;
  double eta = 1.0;
  double mu = 0.0;
  double delta = 1.0;
  double xi = 1.0;

  /// Throws DomainError unless eta > 0, delta > 0, xi > 0, mu > -1 (all finite).
  void validate() const;
};

/// I^alpha t^q = Gamma(q+1)/Gamma(q+alpha+1) t^(q+alpha). Requires q > -1, alpha > 0, t >= 0.
double rl_monomial(double q, double alpha, double t);

/// I_eta^{mu,delta} t^q at t = term.xi:
/// xi^q Gamma(mu + q/eta + 1) / Gamma(mu + q/eta + delta + 1).
/// Throws DomainError when mu + q/eta + 1 <= 0.
double ek_monomial(double q, const BoundaryTerm& term);

/// Hilfer derivative D^{alpha,beta} t^q (n = 2) by the operator chain
/// I^{beta(2-alpha)} D^2 I^{(1-beta)(2-alpha)}.
///
/// Exactly 0 when the inner power q + (1-beta)(2-alpha) is 0 or 1, because D^2
/// annihilates it; that covers q = gamma - 1. Otherwise
/// Gamma(q+1)/Gamma(q+1-alpha) t^(q-alpha), which is 0 at reciprocal-Gamma poles.
double hilfer_monomial(double q, double alpha, double beta, double t);

/// Erdelyi-Kober integral of fn for one boundary term (evaluated at term.xi).
double ek_of(const std::function<double(double)>& fn, const BoundaryTerm& term,
             int rule_order = singquad::kDefaultRuleOrder);

/// I_eta^{mu,delta}[I^alpha fn](xi): outer Erdelyi-Kober rule over an inner
/// Riemann-Liouville rule re-evaluated at every outer node.
double ek_rl_composed(const std::function<double(double)>& fn, const BoundaryTerm& term, double alpha,
                      int rule_order = singquad::kDefaultRuleOrder);

/// Reusable form of ek_rl_composed that keeps both rules.
class ComposedEkRl {
 public:
  ComposedEkRl(const BoundaryTerm& term, double alpha, int rule_order);

  template <std::invocable<double> Fn>
  double operator()(Fn&& fn) const {
    return outer_([&](double y) { return inner_(fn, y); }, xi_);
  }

 private:
  double xi_;
  singquad::RiemannLiouville inner_;
  singquad::ErdelyiKober outer_;
};

}  // namespace hilfer::fracops

#pragma once

#include <string>
#include <vector>

namespace hilfer::selftest {

struct Check {
  std::string suite;
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Erdelyi-Kober quadrature on s^q against the Gamma-ratio closed form:
/// the three worked-example boundary terms times q in {0, gamma-1, alpha, 1}.
std::vector<Check> ek_monomial_suite(int rule_order);

/// int_0^t (t^eta - s^eta)^(lambda-1) s^(nu-1) ds = t^(eta(lambda-1)+nu) B(nu/eta, lambda)/eta,
/// with the left side from double-exponential quadrature.
std::vector<Check> beta_identity_suite();

/// I^a I^b t^q = I^(a+b) t^q through the monomial closed forms.
std::vector<Check> semigroup_suite();

/// eta = 1 reduces Erdelyi-Kober to the Kober operator, and further (mu = 0) to a
/// scaled Riemann-Liouville integral. Five seeded (mu, delta) pairs each.
std::vector<Check> kober_suite(int rule_order);

/// All suites in order.
std::vector<Check> run_all(int rule_order);

}  // namespace hilfer::selftest

#pragma once

#include <cmath>
#include <concepts>
#include <functional>
#include <vector>

namespace hilfer::singquad {

/// Gauss-Jacobi rule on [0, 1] for the weight (1 - u)^a u^b.
///
/// Nodes are strictly increasing in (0, 1), weights are positive and sum to
/// B(a + 1, b + 1). An n-point rule is exact for polynomials of degree 2n - 1.
struct JacobiRule {
  int order = 0;
  double exp_one_minus_u = 0.0;
  double exp_u = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Builds the rule. Throws DomainError when order < 1 or a, b <= -1.
JacobiRule jacobi_rule(int order, double a, double b);

/// Default number of quadrature nodes per one-dimensional integral.
inline constexpr int kDefaultRuleOrder = 40;

/// Riemann-Liouville integral (1/Gamma(alpha)) int_0^t (t - s)^(alpha - 1) fn(s) ds.
///
/// Holds a Gauss-Jacobi rule for the weight (1 - u)^(alpha - 1) after the
/// substitution s = t u, so the endpoint singularity sits in the weight.
class RiemannLiouville {
 public:
  RiemannLiouville(double alpha, int rule_order);

  /// Value at t >= 0 (exactly 0 at t = 0).
  template <std::invocable<double> Fn>
  double operator()(Fn&& fn, double t) const {
    check_point(t);
    if (t == 0.0) {
      return 0.0;
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < rule_.nodes.size(); ++j) {
      sum += rule_.weights[j] * fn(t * rule_.nodes[j]);
    }
    return std::pow(t, alpha_) * inv_gamma_alpha_ * sum;
  }

  double alpha() const noexcept { return alpha_; }
  const JacobiRule& rule() const noexcept { return rule_; }

 private:
  void check_point(double t) const;

  double alpha_;
  double inv_gamma_alpha_;
  JacobiRule rule_;
};

/// Erdelyi-Kober integral I_eta^{mu,delta} evaluated at xi.
///
/// With w = (s/xi)^eta the integral becomes
/// (1/Gamma(delta)) int_0^1 (1 - w)^(delta - 1) w^mu fn(xi w^(1/eta)) dw,
/// which is a Gauss-Jacobi rule with a = delta - 1, b = mu.
class ErdelyiKober {
 public:
  ErdelyiKober(double eta, double mu, double delta, int rule_order);

  template <std::invocable<double> Fn>
  double operator()(Fn&& fn, double xi) const {
    check_point(xi);
    double sum = 0.0;
    for (std::size_t j = 0; j < rule_.nodes.size(); ++j) {
      sum += rule_.weights[j] * fn(points_[j] * xi);
    }
    return inv_gamma_delta_ * sum;
  }

  /// Abscissae of the rule in units of xi, i.e. w_j^(1/eta).
  const std::vector<double>& unit_points() const noexcept { return points_; }
  const JacobiRule& rule() const noexcept { return rule_; }

 private:
  void check_point(double xi) const;

  double eta_;
  double inv_gamma_delta_;
  JacobiRule rule_;
  std::vector<double> points_;
};

/// Riemann-Liouville integral of order alpha in (0, 2) at t > 0.
double integrate_rl(const std::function<double(double)>& fn, double t, double alpha,
                    int rule_order = kDefaultRuleOrder);

/// Erdelyi-Kober integral at xi > 0; requires eta > 0, delta > 0, mu > -1.
double integrate_ek(const std::function<double(double)>& fn, double xi, double eta, double mu,
                    double delta, int rule_order = kDefaultRuleOrder);

}  // namespace hilfer::singquad

#include "hilfer/singquad.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hilfer/errors.hpp"
#include "hilfer/specfun.hpp"

namespace hilfer::singquad {

namespace {

// Jacobi polynomial P_n^{(al,be)} on [-1, 1] and its derivative; also returns P_{n-1}.
struct JacobiEval {
  double p_n;
  double p_nm1;
  double dp_n;
};

JacobiEval eval_jacobi(int n, double al, double be, double x) {
  const double ab = al + be;
  double p1 = 0.5 * (al - be + (ab + 2.0) * x);
  double p0 = 1.0;
  for (int j = 2; j <= n; ++j) {
    const double p_prev = p0;
    p0 = p1;
    const double c = 2.0 * j + ab;
    const double a1 = 2.0 * j * (j + ab) * (c - 2.0);
    const double b1 = (c - 1.0) * (al * al - be * be + c * (c - 2.0) * x);
    const double c1 = 2.0 * (j - 1 + al) * (j - 1 + be) * c;
    p1 = (b1 * p0 - c1 * p_prev) / a1;
  }
  const double c = 2.0 * n + ab;
  const double dp = (n * (al - be - c * x) * p1 + 2.0 * (n + al) * (n + be) * p0) / (c * (1.0 - x * x));
  return {p1, p0, dp};
}

// Symmetric Jacobi matrix of the orthonormal recurrence on [-1, 1].
struct Recurrence {
  Eigen::VectorXd diag;
  Eigen::VectorXd sub;
};

Recurrence jacobi_matrix(int n, double al, double be) {
  const double ab = al + be;
  Recurrence r{Eigen::VectorXd(n), Eigen::VectorXd(std::max(n - 1, 1))};
  for (int k = 0; k < n; ++k) {
    const double c = 2.0 * k + ab;
    if (k == 0) {
      r.diag(k) = (be - al) / (ab + 2.0);
    } else {
      r.diag(k) = (be * be - al * al) / (c * (c + 2.0));
    }
  }
  for (int k = 1; k < n; ++k) {
    const double c = 2.0 * k + ab;
    double b2;
    if (k == 1) {
      b2 = 4.0 * (1.0 + al) * (1.0 + be) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * k * (k + al) * (k + be) * (k + ab) / (c * c * (c + 1.0) * (c - 1.0));
    }
    r.sub(k - 1) = std::sqrt(b2);
  }
  return r;
}

// Golub-Welsch eigenvalues of the Jacobi matrix.
std::vector<double> golub_welsch_nodes(const Recurrence& r, int n) {
  std::vector<double> nodes(n);
  if (n == 1) {
    nodes[0] = r.diag(0);
    return nodes;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(r.diag, r.sub.head(n - 1), Eigen::EigenvaluesOnly);
  for (int k = 0; k < n; ++k) {
    nodes[k] = solver.eigenvalues()(k);
  }
  return nodes;
}

// Christoffel number divided by the total mass: 1 / sum_j q_j(x)^2 with q_0 = 1.
double christoffel_fraction(const Recurrence& r, int n, double x) {
  double q_prev = 0.0;
  double q = 1.0;
  double sum = 1.0;
  for (int j = 0; j + 1 < n; ++j) {
    const double next = ((x - r.diag(j)) * q - (j > 0 ? r.sub(j - 1) * q_prev : 0.0)) / r.sub(j);
    q_prev = q;
    q = next;
    sum += q * q;
  }
  return 1.0 / sum;
}

}  // namespace

JacobiRule jacobi_rule(int order, double a, double b) {
  if (order < 1) {
    throw DomainError("quadrature order must be >= 1, got " + std::to_string(order));
  }
  if (!(a > -1.0) || !(b > -1.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("Jacobi weight exponents must exceed -1 (a=" + std::to_string(a) +
                      ", b=" + std::to_string(b) + ")");
  }
  // On [-1, 1] the weight (1 - x)^a (1 + x)^b maps to (1 - u)^a u^b with u = (1 + x)/2.
  const Recurrence rec = jacobi_matrix(order, a, b);
  std::vector<double> x = golub_welsch_nodes(rec, order);

  // Newton polish; the eigenvalues are already close, a few steps reach full precision.
  const double mass = specfun::beta(a + 1.0, b + 1.0);
  std::vector<double> w(order);
  for (int k = 0; k < order; ++k) {
    double z = x[k];
    for (int it = 0; it < 8; ++it) {
      const JacobiEval ev = eval_jacobi(order, a, b, z);
      const double next = std::clamp(z - ev.p_n / ev.dp_n, std::nextafter(-1.0, 0.0), std::nextafter(1.0, 0.0));
      const bool done = std::abs(next - z) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(z);
      z = next;
      if (done) {
        break;
      }
    }
    x[k] = z;
    w[k] = mass * christoffel_fraction(rec, order, z);
  }

  JacobiRule rule;
  rule.order = order;
  rule.exp_one_minus_u = a;
  rule.exp_u = b;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  std::vector<int> idx(order);
  for (int k = 0; k < order; ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return x[i] < x[j]; });
  for (int k = 0; k < order; ++k) {
    rule.nodes[k] = 0.5 * (1.0 + x[idx[k]]);
    rule.weights[k] = w[idx[k]];
  }
  return rule;
}

RiemannLiouville::RiemannLiouville(double alpha, int rule_order)
    : alpha_(alpha), inv_gamma_alpha_(0.0) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw DomainError("Riemann-Liouville order must lie in (0, 2), got " + std::to_string(alpha));
  }
  inv_gamma_alpha_ = 1.0 / specfun::gamma(alpha);
  rule_ = jacobi_rule(rule_order, alpha - 1.0, 0.0);
}

void RiemannLiouville::check_point(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("Riemann-Liouville integral needs t >= 0, got " + std::to_string(t));
  }
}

ErdelyiKober::ErdelyiKober(double eta, double mu, double delta, int rule_order)
    : eta_(eta), inv_gamma_delta_(0.0) {
  if (!(eta > 0.0)) {
    throw DomainError("Erdelyi-Kober eta must be positive, got " + std::to_string(eta));
  }
  if (!(delta > 0.0)) {
    throw DomainError("Erdelyi-Kober delta must be positive, got " + std::to_string(delta));
  }
  if (!(mu > -1.0)) {
    throw DomainError("Erdelyi-Kober mu must exceed -1, got " + std::to_string(mu));
  }
  inv_gamma_delta_ = 1.0 / specfun::gamma(delta);
  rule_ = jacobi_rule(rule_order, delta - 1.0, mu);
  points_.reserve(rule_.nodes.size());
  for (double w : rule_.nodes) {
    points_.push_back(std::pow(w, 1.0 / eta_));
  }
}

void ErdelyiKober::check_point(double xi) const {
  if (!(xi > 0.0) || !std::isfinite(xi)) {
    throw DomainError("Erdelyi-Kober evaluation point must be positive, got " + std::to_string(xi));
  }
}

double integrate_rl(const std::function<double(double)>& fn, double t, double alpha, int rule_order) {
  if (!(t > 0.0)) {
    throw DomainError("integrate_rl needs t > 0, got " + std::to_string(t));
  }
  return RiemannLiouville(alpha, rule_order)(fn, t);
}

double integrate_ek(const std::function<double(double)>& fn, double xi, double eta, double mu,
                    double delta, int rule_order) {
  return ErdelyiKober(eta, mu, delta, rule_order)(fn, xi);
}

}  // namespace hilfer::singquad

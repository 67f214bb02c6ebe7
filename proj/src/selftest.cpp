#include "hilfer/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "hilfer/fracops.hpp"
#include "hilfer/reference.hpp"
#include "hilfer/singquad.hpp"
#include "hilfer/specfun.hpp"

namespace hilfer::selftest {

namespace {

constexpr std::uint64_t kSeed = 20240611;

Check make_check(std::string suite, std::string name, double computed, double expected, double tol) {
  Check c;
  c.suite = std::move(suite);
  c.name = std::move(name);
  c.computed = computed;
  c.expected = expected;
  c.rel_error = std::abs(computed - expected) / std::max(std::abs(expected), 1e-300);
  c.tolerance = tol;
  c.passed = c.rel_error <= tol;
  return c;
}

template <typename... Args>
std::string fmt(const char* pattern, Args... args) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

}  // namespace

std::vector<Check> ek_monomial_suite(int rule_order) {
  const auto spec = reference::worked_example();
  const double alpha = spec.linear.alpha;
  const double g1 = spec.linear.gamma() - 1.0;
  std::vector<Check> out;
  for (std::size_t i = 0; i < spec.linear.terms.size(); ++i) {
    const auto& term = spec.linear.terms[i];
    for (double q : {0.0, g1, alpha, 1.0}) {
      const double quad = fracops::ek_of([q](double s) { return std::pow(s, q); }, term, rule_order);
      out.push_back(make_check("ek-monomial", fmt("term %zu, q=%.6g", i + 1, q), quad,
                               fracops::ek_monomial(q, term), 1e-8));
    }
  }
  return out;
}

std::vector<Check> beta_identity_suite() {
  struct Params {
    double eta, lambda, nu;
  };
  const Params params[] = {{1.0, 2.0, 3.0}, {2.0, 1.5, 2.5}, {0.5, 0.7, 1.2}};
  boost::math::quadrature::tanh_sinh<double> integrator;
  std::vector<Check> out;
  for (const auto& p : params) {
    for (double t : {0.5, 1.0, 2.0}) {
      const double te = std::pow(t, p.eta);
      auto kernel = [&](double s) {
        return std::pow(te - std::pow(s, p.eta), p.lambda - 1.0) * std::pow(s, p.nu - 1.0);
      };
      const double quad = integrator.integrate(kernel, 0.0, t);
      const double closed = std::pow(t, p.eta * (p.lambda - 1.0) + p.nu) *
                            specfun::beta(p.nu / p.eta, p.lambda) / p.eta;
      out.push_back(make_check("beta-identity",
                               fmt("eta=%g lambda=%g nu=%g t=%g", p.eta, p.lambda, p.nu, t),
                               quad, closed, 1e-8));
    }
  }
  return out;
}

std::vector<Check> semigroup_suite() {
  const double orders[] = {0.4, 0.9, 1.3};
  const double t = 1.7;
  std::vector<Check> out;
  for (double a : orders) {
    for (double b : orders) {
      for (double q : {0.0, 1.0, 2.0}) {
        // I^b t^q = c t^(q+b), then I^a of that.
        const double inner = fracops::rl_monomial(q, b, 1.0);
        const double nested = inner * fracops::rl_monomial(q + b, a, t);
        const double direct = fracops::rl_monomial(q, a + b, t);
        out.push_back(make_check("semigroup", fmt("a=%g b=%g q=%g", a, b, q), nested, direct, 1e-10));
      }
    }
  }
  return out;
}

std::vector<Check> kober_suite(int rule_order) {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> mu_dist(0, 3);
  std::uniform_real_distribution<double> delta_dist(0.1, 1.9);
  std::uniform_real_distribution<double> xi_dist(0.3, 2.0);
  auto fn = [](double s) { return std::exp(-s) + std::cos(2.0 * s); };

  std::vector<Check> out;
  for (int k = 0; k < 5; ++k) {
    const double mu = mu_dist(rng);
    const double delta = delta_dist(rng);
    const double xi = xi_dist(rng);
    const fracops::BoundaryTerm term{1.0, 1.0, mu, delta, xi};
    const double ek = fracops::ek_of(fn, term, rule_order);
    const double kober =
        std::pow(xi, -mu) *
        singquad::integrate_rl([&](double s) { return std::pow(s, mu) * fn(s); }, xi, delta, rule_order) /
        std::pow(xi, delta);
    out.push_back(make_check("kober", fmt("mu=%g delta=%.6g xi=%.6g", mu, delta, xi), ek, kober, 1e-9));
  }
  for (int k = 0; k < 5; ++k) {
    const double delta = delta_dist(rng);
    const double xi = xi_dist(rng);
    const fracops::BoundaryTerm term{1.0, 1.0, 0.0, delta, xi};
    const double ek = fracops::ek_of(fn, term, rule_order);
    const double rl = std::pow(xi, -delta) * singquad::integrate_rl(fn, xi, delta, rule_order);
    out.push_back(make_check("riemann-liouville", fmt("delta=%.6g xi=%.6g", delta, xi), ek, rl, 1e-9));
  }
  return out;
}

std::vector<Check> run_all(int rule_order) {
  std::vector<Check> all;
  for (auto&& suite : {ek_monomial_suite(rule_order), beta_identity_suite(), semigroup_suite(),
                       kober_suite(rule_order)}) {
    all.insert(all.end(), suite.begin(), suite.end());
  }
  return all;
}

}  // namespace hilfer::selftest

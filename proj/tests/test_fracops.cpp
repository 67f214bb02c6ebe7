#include <cmath>
#include <random>

#include "doctest.h"
#include "hilfer/errors.hpp"
#include "hilfer/fracops.hpp"
#include "hilfer/reference.hpp"
#include "hilfer/singquad.hpp"
#include "test_util.hpp"

using namespace hilfer;
using namespace hilfer::fracops;

namespace {

// Hilfer derivative of t^q through I^{b(2-a)} D^2 I^{(1-b)(2-a)}, power by power,
// with the C library gamma.
double hilfer_chain(double q, double alpha, double beta, double t) {
  const double inner = (1.0 - beta) * (2.0 - alpha);
  const double outer = beta * (2.0 - alpha);
  const double p = q + inner;
  double c = std::tgamma(q + 1.0) / std::tgamma(p + 1.0);  // I^inner t^q = c t^p
  c *= p * (p - 1.0);                                       // D^2 t^p
  if (c == 0.0) return 0.0;
  const double r = p - 2.0;
  if (outer > 0.0) {
    c *= std::tgamma(r + 1.0) / std::tgamma(r + outer + 1.0);
  }
  return c * std::pow(t, r + outer);
}

}  // namespace

TEST_SUITE("fracops") {

TEST_CASE("rl_monomial") {
  CHECK(rl_monomial(0.0, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rl_monomial(1.0, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(rel_err(rl_monomial(0.0, 4.0 / 3.0, 1.0), 0.83988489129163926) < 1e-14);
  CHECK(rl_monomial(2.0, 0.7, 0.0) == 0.0);
  CHECK_THROWS_AS(rl_monomial(-1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(rl_monomial(0.5, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(rl_monomial(0.5, 1.0, -1.0), DomainError);
}

TEST_CASE("ek_monomial") {
  CHECK(rel_err(ek_monomial(0.0, {1.0, 1.0, 0.0, 1.0, 1.0}), 1.0) < 1e-14);
  CHECK(rel_err(ek_monomial(1.0, {1.0, 1.0, 0.0, 1.0, 1.0}), 0.5) < 1e-13);
  const BoundaryTerm t1{1.0 / 3.0, 1.0 / 5.0, 1.0 / 4.0, 3.0 / 7.0, 5.0 / 4.0};
  const double q = 8.0 / 9.0;
  const double expect = std::pow(1.25, q) * std::tgamma(0.25 + 40.0 / 9.0 + 1.0) /
                        std::tgamma(0.25 + 40.0 / 9.0 + 3.0 / 7.0 + 1.0);
  CHECK(rel_err(ek_monomial(q, t1), expect) < 1e-13);
  CHECK_THROWS_AS(ek_monomial(-2.0, {1.0, 1.0, 0.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("hilfer_monomial annihilates t^(gamma-1)") {
  for (auto [a, b] : {std::pair{4.0 / 3.0, 5.0 / 6.0}, std::pair{1.5, 0.0}, std::pair{1.2, 1.0},
                      std::pair{1.9, 0.3}}) {
    const double g = a + 2.0 * b - a * b;
    CHECK(hilfer_monomial(g - 1.0, a, b, 0.7) == 0.0);
  }
}

TEST_CASE("hilfer_monomial against the operator chain") {
  const double alpha = 4.0 / 3.0;
  CHECK(rel_err(hilfer_monomial(alpha, alpha, 5.0 / 6.0, 1.0), std::tgamma(alpha + 1.0)) < 1e-13);
  CHECK(rel_err(hilfer_monomial(2.0, alpha, 5.0 / 6.0, 1.0), 2.2154643348649449) < 1e-13);
  CHECK(rel_err(hilfer_chain(2.0, alpha, 5.0 / 6.0, 1.0), 2.2154643348649449) < 1e-13);
  for (double a : {1.1, 4.0 / 3.0, 1.75}) {
    for (double b : {0.0, 0.4, 5.0 / 6.0, 1.0}) {
      for (double q : {1.5, 2.0, 2.7, 3.0}) {
        for (double t : {0.3, 1.0, 2.2}) {
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(q);
          CHECK(rel_err(hilfer_monomial(q, a, b, t), hilfer_chain(q, a, b, t)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("hilfer_monomial domain") {
  CHECK_THROWS_AS(hilfer_monomial(-0.2, 4.0 / 3.0, 5.0 / 6.0, 1.0), DomainError);
}

TEST_CASE("ek_of facade") {
  const BoundaryTerm t{1.0, 0.6, 0.5, 0.8, 1.1};
  CHECK(rel_err(ek_of([](double) { return 1.0; }, t), std::tgamma(1.5) / std::tgamma(2.3)) < 1e-12);
  CHECK(rel_err(ek_of([](double s) { return s; }, {1.0, 1.0, 0.0, 1.0, 1.0}), 0.5) < 1e-13);
  const auto spec = reference::worked_example();
  const double q = spec.linear.gamma() - 1.0;
  for (const auto& term : spec.linear.terms) {
    CHECK(rel_err(ek_of([q](double s) { return std::pow(s, q); }, term), ek_monomial(q, term)) < 1e-10);
  }
}

TEST_CASE("ek_rl_composed closed forms") {
  const auto spec = reference::worked_example();
  const double alpha = spec.linear.alpha;
  for (const auto& term : spec.linear.terms) {
    CHECK(ek_rl_composed([](double) { return 0.0; }, term, alpha) == 0.0);
    const double one = ek_rl_composed([](double) { return 1.0; }, term, alpha);
    const double closed = rl_monomial(0.0, alpha, 1.0) * ek_monomial(alpha, term);
    CHECK(rel_err(one, closed) < 1e-8);
    for (double q : {1.0, 2.0}) {
      const double got = ek_rl_composed([q](double s) { return std::pow(s, q); }, term, alpha);
      CHECK(rel_err(got, rl_monomial(q, alpha, 1.0) * ek_monomial(q + alpha, term)) < 1e-8);
    }
  }
}

TEST_CASE("semigroup on monomials") {
  for (double a : {0.4, 0.9, 1.3}) {
    for (double b : {0.4, 0.9, 1.3}) {
      for (double q : {0.0, 1.0, 2.0}) {
        const double nested = rl_monomial(q, b, 1.0) * rl_monomial(q + b, a, 1.3);
        CHECK(rel_err(nested, rl_monomial(q, a + b, 1.3)) < 1e-11);
      }
    }
  }
}

TEST_CASE("Kober and Riemann-Liouville reductions") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> mus(0, 3);
  std::uniform_real_distribution<double> deltas(0.1, 1.9);
  auto fn = [](double s) { return std::sin(s) + 2.0; };
  for (int i = 0; i < 5; ++i) {
    const double mu = mus(rng);
    const double delta = deltas(rng);
    const double x = 1.3;
    const double ek = ek_of(fn, {1.0, 1.0, mu, delta, x});
    const double kober = std::pow(x, -(delta + mu)) *
                         singquad::integrate_rl([&](double s) { return std::pow(s, mu) * fn(s); }, x, delta);
    CHECK(rel_err(ek, kober) < 1e-9);
    const double ek0 = ek_of(fn, {1.0, 1.0, 0.0, delta, x});
    CHECK(rel_err(ek0, std::pow(x, -delta) * singquad::integrate_rl(fn, x, delta)) < 1e-9);
  }
}

TEST_CASE("operators are linear") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  auto f = [](double s) { return std::exp(s); };
  auto g = [](double s) { return std::cos(3.0 * s); };
  const BoundaryTerm term{1.0, 0.5, 0.3, 0.7, 1.2};
  for (int i = 0; i < 10; ++i) {
    const double a = coef(rng);
    const double b = coef(rng);
    auto h = [&](double s) { return a * f(s) + b * g(s); };
    const double lhs_rl = singquad::integrate_rl(h, 1.1, 1.4);
    const double rhs_rl = a * singquad::integrate_rl(f, 1.1, 1.4) + b * singquad::integrate_rl(g, 1.1, 1.4);
    CHECK(std::abs(lhs_rl - rhs_rl) <= 1e-10 * std::max(1.0, std::abs(rhs_rl)));
    const double lhs_ek = ek_of(h, term);
    const double rhs_ek = a * ek_of(f, term) + b * ek_of(g, term);
    CHECK(std::abs(lhs_ek - rhs_ek) <= 1e-10 * std::max(1.0, std::abs(rhs_ek)));
    const double lhs_c = ek_rl_composed(h, term, 1.4);
    const double rhs_c = a * ek_rl_composed(f, term, 1.4) + b * ek_rl_composed(g, term, 1.4);
    CHECK(std::abs(lhs_c - rhs_c) <= 1e-10 * std::max(1.0, std::abs(rhs_c)));
  }
}

TEST_CASE("boundary term validation") {
  CHECK_THROWS_AS((BoundaryTerm{1.0, 0.0, 0.0, 1.0, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((BoundaryTerm{1.0, 1.0, -1.0, 1.0, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((BoundaryTerm{1.0, 1.0, 0.0, 0.0, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((BoundaryTerm{1.0, 1.0, 0.0, 1.0, 0.0}.validate()), DomainError);
  CHECK_NOTHROW((BoundaryTerm{-3.0, 0.2, -0.5, 0.1, 2.0}.validate()));
}

}  // TEST_SUITE

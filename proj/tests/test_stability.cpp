#include <cmath>
#include <cstring>

#include "doctest.h"
#include "hilfer/errors.hpp"
#include "hilfer/exprlang.hpp"
#include "hilfer/reference.hpp"
#include "hilfer/stability.hpp"

using namespace hilfer;
using namespace hilfer::stability;

TEST_SUITE("stability") {

TEST_CASE("perturbation validation") {
  PerturbationSpec p;
  p.epsilon = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.epsilon = 1e-3;
  p.g = exprlang::parse("x");
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.g = exprlang::parse("1");
  p.g_sup = 2e-3;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.g_sup = 1e-3;
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("scaled perturbations stay inside epsilon") {
  for (const auto& [label, g] : default_g_family(1.5)) {
    const auto p = scaled_perturbation(g, label, 1e-2, 1.5, 201);
    CHECK(p.g_sup <= 1e-2);
    CHECK(p.g_sup >= 1e-2 / 1.02);
    double sup = 0.0;
    for (double t = 0.0; t <= 1.5; t += 1e-4) sup = std::max(sup, std::abs(p.g.eval(t, 0.0)));
    CHECK(sup <= 1e-2);
  }
  CHECK(default_g_family(1.5).size() == 4);
}

TEST_CASE("zero perturbation reproduces the base solution") {
  const auto spec = reference::worked_example_nontrivial();
  picard::SolverOptions opts;
  PerturbationSpec p;
  p.epsilon = 1e-3;
  const auto y = perturbed_solve(spec, p, opts);
  const auto x = picard::picard_solve(spec, opts);
  CHECK(grid::sup_distance(y.solution, x.solution) <= 2.0 * opts.tol);
}

TEST_CASE("constant perturbation of the worked example") {
  const auto spec = reference::worked_example();
  picard::SolverOptions opts;
  const auto p = scaled_perturbation(exprlang::parse("1"), "1", 1e-3, spec.linear.t_max(), opts.grid_n);
  const auto y = perturbed_solve(spec, p, opts);
  CHECK(y.converged);
  auto perturbed = spec;
  perturbed.rhs = exprlang::ExprTree::binary(exprlang::BinaryOp::Add, spec.rhs, p.g);
  CHECK(picard::residual(perturbed, y.solution).first <= 1e-7);
}

TEST_CASE("bound holds on the linear right-hand side") {
  auto spec = reference::worked_example();
  spec.rhs = exprlang::parse("x/50");
  spec.rhs_text = "x/50";
  picard::SolverOptions opts;
  const auto exp = uh_experiment(spec, {1e-3, 1e-2}, {{"cos(t)", exprlang::parse("cos(t)")}}, opts);
  REQUIRE(exp.reports.size() == 2);
  for (const auto& r : exp.reports) {
    CHECK(r.deviation > 0.0);
    CHECK(r.bound_holds);
    CHECK(r.residual_bound_holds);
    CHECK(r.cf_bound == doctest::Approx(exp.ulam_hyers_Cf * r.epsilon));
    CHECK(r.tightness == doctest::Approx(r.deviation / r.cf_bound));
  }
}

TEST_CASE("halving epsilon halves the bound and does not grow the deviation") {
  const auto spec = reference::worked_example_nontrivial();
  picard::SolverOptions opts;
  const auto exp = uh_experiment(spec, {1e-2, 5e-3}, default_g_family(spec.linear.t_max()), opts);
  REQUIRE(exp.reports.size() == 8);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& big = exp.reports[k];
    const auto& small = exp.reports[k + 4];
    CHECK(big.g_label == small.g_label);
    CHECK(small.cf_bound <= 0.5 * big.cf_bound * (1.0 + 1e-15));
    CHECK(small.deviation <= big.deviation + opts.tol);
  }
}

TEST_CASE("generalized stability function vanishes at zero") {
  const auto spec = reference::worked_example_nontrivial();
  picard::SolverOptions opts;
  const auto exp = uh_experiment(spec, {1e-3}, default_g_family(spec.linear.t_max()), opts);
  for (const auto& r : exp.reports) CHECK(r.cf_bound / r.epsilon == doctest::Approx(exp.ulam_hyers_Cf));
  CHECK(exp.skipped == 0);
}

TEST_CASE("experiment preconditions") {
  picard::SolverOptions opts;
  const auto spec = reference::worked_example_nontrivial();
  try {
    uh_experiment(spec, {0.0}, default_g_family(1.5), opts);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::strstr(e.what(), "epsilon must be positive") != nullptr);
  }
  auto big = spec;
  big.bounds.lipschitz_L = 0.5;
  try {
    uh_experiment(big, {1e-3}, default_g_family(1.5), opts);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::strstr(e.what(), "C_f undefined") != nullptr);
  }
}

}  // TEST_SUITE

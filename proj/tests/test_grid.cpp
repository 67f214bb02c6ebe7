#include <cmath>
#include <random>

#include "doctest.h"
#include "hilfer/errors.hpp"
#include "hilfer/grid.hpp"
#include "test_util.hpp"

using namespace hilfer;
using namespace hilfer::grid;

TEST_SUITE("grid") {

TEST_CASE("construction is validated") {
  CHECK_THROWS_AS(GridFunction({0.0}, {1.0}), DomainError);
  CHECK_THROWS_AS(GridFunction({0.0, 1.0}, {1.0}), DomainError);
  CHECK_THROWS_AS(GridFunction({0.1, 1.0}, {1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(GridFunction({0.0, 1.0, 1.0}, {1.0, 2.0, 3.0}), DomainError);
  CHECK_THROWS_AS(GridFunction({0.0, 1.0}, {1.0, NAN}), DomainError);
  CHECK_THROWS_AS(GridFunction({0.0, 1.0}, {1.0, INFINITY}), DomainError);
}

TEST_CASE("interpolation reproduces nodes and rejects points outside") {
  const GridFunction g({0.0, 0.5, 1.0, 2.0}, {0.0, 1.0, -1.0, 3.0});
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(g(g.nodes()[k]) == g.values()[k]);
  CHECK_THROWS_AS(g(-1e-9), DomainError);
  CHECK_THROWS_AS(g(2.0 + 1e-9), DomainError);
}

TEST_CASE("monotone data gives a monotone interpolant without overshoot") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> step(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x{0.0}, y{0.0};
    for (int k = 1; k < 12; ++k) {
      x.push_back(x.back() + 0.05 + step(rng));
      y.push_back(y.back() + (step(rng) < 0.3 ? 0.0 : step(rng) * step(rng) * 10.0));
    }
    const GridFunction g(x, y);
    double prev = -INFINITY;
    for (double t = 0.0; t <= x.back(); t += x.back() / 2000.0) {
      const double v = g(t);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
  const GridFunction bump({0.0, 1.0, 2.0, 3.0}, {0.0, 1.0, 1.0, 0.0});
  for (double t = 0.0; t <= 3.0; t += 0.01) {
    CHECK(bump(t) <= 1.0 + 1e-15);
    CHECK(bump(t) >= -1e-15);
  }
}

TEST_CASE("cubic interpolation is third-order on smooth data") {
  auto err = [](int n) {
    std::vector<double> nodes(n + 1);
    for (int j = 0; j <= n; ++j) nodes[j] = 2.0 * j / n;
    const auto g = GridFunction::sample(nodes, [](double t) { return std::exp(t) + t * t; });
    double e = 0.0;
    for (double t = 0.4; t <= 1.6; t += 0.0007) e = std::max(e, std::abs(g(t) - std::exp(t) - t * t));
    return e;
  };
  const double e1 = err(40);
  const double e2 = err(80);
  CHECK(e1 / e2 > 6.0);
}

TEST_CASE("linear interpolation") {
  const GridFunction g({0.0, 1.0, 3.0}, {0.0, 2.0, 0.0}, Interpolation::Linear);
  CHECK(g(0.5) == 1.0);
  CHECK(g(2.0) == 1.0);
}

TEST_CASE("sup norms respect the cut-off") {
  const GridFunction a({0.0, 1.0, 2.0}, {0.0, 1.0, 5.0});
  const GridFunction b({0.0, 1.0, 2.0}, {0.5, 1.0, -5.0});
  CHECK(sup_norm(a) == 5.0);
  CHECK(sup_norm(a, 1.0) == 1.0);
  CHECK(sup_distance(a, b) == 10.0);
  CHECK(sup_distance(a, b, 1.5) == 0.5);
  const GridFunction c({0.0, 2.0}, {0.0, 1.0});
  CHECK_THROWS_AS(sup_distance(a, c), DomainError);
}

TEST_CASE("mesh layout") {
  const auto m = make_mesh(1.5, 201, 17.0 / 9.0, false, 1.0);
  CHECK(m.front() == 0.0);
  CHECK(m.back() == 1.5);
  CHECK(std::find(m.begin(), m.end(), 1.0) != m.end());
  CHECK((m.size() == 201 || m.size() == 202));
  for (std::size_t k = 1; k < m.size(); ++k) CHECK(m[k] > m[k - 1]);
  CHECK(m[1] < 1.5 / 200.0);  // graded towards 0

  const auto u = make_mesh(2.0, 5, 1.5, true, 0.0);
  CHECK(u == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
  CHECK_THROWS_AS(make_mesh(1.0, 2, 1.5, false, 0.0), DomainError);
}

}  // TEST_SUITE

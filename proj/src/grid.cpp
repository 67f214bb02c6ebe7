#include "hilfer/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hilfer/errors.hpp"

namespace hilfer::grid {

namespace {

// Three-point end slope with the Fritsch-Carlson shape limits.
double end_slope(double h0, double h1, double d0, double d1) {
  double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
  if (s * d0 <= 0.0) {
    s = 0.0;
  } else if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0)) {
    s = 3.0 * d0;
  }
  return s;
}

std::vector<double> monotone_slopes(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> s(n, 0.0);
  if (n == 2) {
    s[0] = s[1] = (y[1] - y[0]) / (x[1] - x[0]);
    return s;
  }
  std::vector<double> h(n - 1), d(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = x[k + 1] - x[k];
    d[k] = (y[k + 1] - y[k]) / h[k];
  }
  // Centred parabolic slope with Hyman's monotonicity filter.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (d[k - 1] * d[k] <= 0.0) {
      s[k] = 0.0;
      continue;
    }
    const double p = (h[k] * d[k - 1] + h[k - 1] * d[k]) / (h[k - 1] + h[k]);
    const double cap = 3.0 * std::min(std::abs(d[k - 1]), std::abs(d[k]));
    s[k] = (p * d[k] <= 0.0) ? 0.0 : std::copysign(std::min(std::abs(p), cap), d[k]);
  }
  s[0] = end_slope(h[0], h[1], d[0], d[1]);
  s[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
  return s;
}

}  // namespace

GridFunction::GridFunction(std::vector<double> nodes, std::vector<double> values, Interpolation interp)
    : nodes_(std::move(nodes)), values_(std::move(values)), interp_(interp) {
  if (nodes_.size() < 2) {
    throw DomainError("a grid function needs at least two nodes");
  }
  if (nodes_.size() != values_.size()) {
    throw DomainError("grid function nodes and values differ in length");
  }
  if (nodes_.front() != 0.0) {
    throw DomainError("grid function nodes must start at 0");
  }
  for (std::size_t k = 1; k < nodes_.size(); ++k) {
    if (!(nodes_[k] > nodes_[k - 1])) {
      throw DomainError("grid function nodes must be strictly increasing");
    }
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw DomainError("grid function values must be finite");
    }
  }
  if (interp_ == Interpolation::MonotoneCubic) {
    slopes_ = monotone_slopes(nodes_, values_);
  }
}

GridFunction GridFunction::sample(std::vector<double> nodes, const std::function<double(double)>& fn,
                                  Interpolation interp) {
  std::vector<double> values;
  values.reserve(nodes.size());
  for (double t : nodes) {
    values.push_back(fn(t));
  }
  return GridFunction(std::move(nodes), std::move(values), interp);
}

GridFunction GridFunction::with_values(std::vector<double> values) const {
  return GridFunction(nodes_, std::move(values), interp_);
}

double GridFunction::operator()(double t) const {
  if (!(t >= 0.0 && t <= nodes_.back())) {
    throw DomainError("grid function evaluated at t = " + std::to_string(t) + " outside [0, " +
                      std::to_string(nodes_.back()) + "]");
  }
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
  std::size_t k = (it == nodes_.end()) ? nodes_.size() - 2 : static_cast<std::size_t>(it - nodes_.begin()) - 1;
  const double x0 = nodes_[k];
  const double h = nodes_[k + 1] - x0;
  const double u = (t - x0) / h;
  const double y0 = values_[k];
  const double y1 = values_[k + 1];
  if (interp_ == Interpolation::Linear) {
    return y0 + u * (y1 - y0);
  }
  const double u2 = u * u;
  const double u3 = u2 * u;
  const double h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
  const double h10 = u3 - 2.0 * u2 + u;
  const double h01 = -2.0 * u3 + 3.0 * u2;
  const double h11 = u3 - u2;
  return h00 * y0 + h10 * h * slopes_[k] + h01 * y1 + h11 * h * slopes_[k + 1];
}

double sup_distance(const GridFunction& a, const GridFunction& b, double upto) {
  if (a.size() != b.size()) {
    throw DomainError("sup_distance needs grid functions on the same nodes");
  }
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a.nodes()[k] > upto) break;
    m = std::max(m, std::abs(a.values()[k] - b.values()[k]));
  }
  return m;
}

double sup_norm(const GridFunction& a, double upto) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a.nodes()[k] > upto) break;
    m = std::max(m, std::abs(a.values()[k]));
  }
  return m;
}

std::vector<double> make_mesh(double t_max, int grid_n, double gamma, bool uniform, double must_contain) {
  if (grid_n < 3) {
    throw DomainError("grid_n must be at least 3, got " + std::to_string(grid_n));
  }
  if (!(t_max > 0.0)) {
    throw DomainError("mesh length must be positive");
  }
  double p = 1.0;
  if (!uniform && gamma > 1.0) {
    p = std::clamp(2.0 / (gamma - 1.0), 1.0, 3.0);
  }
  const int cells = grid_n - 1;
  std::vector<double> nodes(grid_n);
  for (int j = 0; j <= cells; ++j) {
    nodes[j] = t_max * std::pow(static_cast<double>(j) / cells, p);
  }
  nodes.back() = t_max;

  if (must_contain > 0.0 && must_contain < t_max) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), must_contain);
    const std::size_t k = static_cast<std::size_t>(it - nodes.begin());
    if (nodes[k] != must_contain) {
      const double lo = nodes[k - 1];
      const double hi = nodes[k];
      const double quarter = 0.25 * (hi - lo);
      if (must_contain - lo < quarter && k - 1 > 0) {
        nodes[k - 1] = must_contain;
      } else if (hi - must_contain < quarter && k + 1 < nodes.size()) {
        nodes[k] = must_contain;
      } else {
        nodes.insert(it, must_contain);
      }
    }
  }
  return nodes;
}

}  // namespace hilfer::grid

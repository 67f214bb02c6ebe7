#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace hilfer::grid {

enum class Interpolation { MonotoneCubic, Linear };

/// A function sampled on strictly increasing nodes starting at 0.
///
/// Between nodes it is evaluated with a shape-preserving cubic Hermite
/// interpolant (parabolic slopes, Hyman filter), or piecewise-linearly.
class GridFunction {
 public:
  GridFunction(std::vector<double> nodes, std::vector<double> values,
               Interpolation interp = Interpolation::MonotoneCubic);

  /// Samples fn on the nodes.
  static GridFunction sample(std::vector<double> nodes, const std::function<double(double)>& fn,
                             Interpolation interp = Interpolation::MonotoneCubic);

  /// Interpolated value; throws DomainError outside [0, t_max].
  double operator()(double t) const;

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  double t_max() const noexcept { return nodes_.back(); }
  Interpolation interpolation() const noexcept { return interp_; }

  /// Same nodes, new values.
  GridFunction with_values(std::vector<double> values) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<double> slopes_;
  Interpolation interp_;
};

/// max_j |a_j - b_j| over nodes with t_j <= upto (both share nodes).
double sup_distance(const GridFunction& a, const GridFunction& b,
                    double upto = std::numeric_limits<double>::infinity());

/// max_j |a_j| over nodes with t_j <= upto.
double sup_norm(const GridFunction& a, double upto = std::numeric_limits<double>::infinity());

/// grid_n nodes on [0, t_max]: t_j = t_max (j/(grid_n-1))^p with
/// p = 2/(gamma-1) clamped to [1, 3] (p = 1 when uniform). `must_contain`
/// (typically the horizon T) is inserted, replacing the nearest node when it
/// falls closer than a quarter cell.
std::vector<double> make_mesh(double t_max, int grid_n, double gamma, bool uniform, double must_contain);

}  // namespace hilfer::grid

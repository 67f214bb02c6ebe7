#pragma once

namespace hilfer::specfun {

/// A strictly positive real. Construction throws DomainError otherwise.
class PositiveReal {
 public:
  PositiveReal(double value);  // NOLINT(google-explicit-constructor): checked conversion

  double value() const noexcept { return value_; }
  operator double() const noexcept { return value_; }  // NOLINT

 private:
  double value_;
};

/// Gamma function on (0, 170]. Lanczos approximation (g = 7, 9 terms).
/// Throws DomainError for x <= 0 and OverflowError for x > 170.
double gamma(PositiveReal x);

/// ln Gamma(x) for x > 0. Uses a zeta-series near the roots at 1 and 2
/// so that relative accuracy holds there too.
double log_gamma(PositiveReal x);

/// Beta function B(w, v) = Gamma(w) Gamma(v) / Gamma(w + v), via log-gamma.
double beta(PositiveReal w, PositiveReal v);

/// Gamma(a) / Gamma(b) as exp(lnGamma(a) - lnGamma(b)); both arguments must be positive.
/// Throws GammaPoleError when either argument is <= 0.
double gamma_ratio(double a, double b);

}  // namespace hilfer::specfun

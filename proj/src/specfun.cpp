#include "hilfer/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hilfer/errors.hpp"

namespace hilfer::specfun {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeff = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kEulerGamma = 0.57721566490153286061;

// zeta(k) for k = 2..30
constexpr std::array<double, 29> kZeta = {
    1.6449340668482264365, 1.2020569031595942854, 1.0823232337111381915,
    1.0369277551433699263, 1.0173430619844491397, 1.0083492773819228268,
    1.0040773561979443394, 1.0020083928260822144, 1.0009945751278180853,
    1.0004941886041194646, 1.0002460865533080483, 1.0001227133475784891,
    1.0000612481350587048, 1.0000305882363070205, 1.0000152822594086519,
    1.0000076371976378998, 1.0000038172932649998, 1.0000019082127165539,
    1.0000009539620338728, 1.0000004769329867878, 1.0000002384505027277,
    1.0000001192199259653, 1.0000000596081890513, 1.0000000298035035147,
    1.0000000149015548284, 1.0000000074507117898, 1.0000000037253340248,
    1.0000000018626597235, 1.0000000009313274324};

constexpr double kSeriesRadius = 0.25;

double lanczos_sum(double z) {
  double a = kLanczosCoeff[0];
  for (std::size_t i = 1; i < kLanczosCoeff.size(); ++i) {
    a += kLanczosCoeff[i] / (z + static_cast<double>(i));
  }
  return a;
}

// ln Gamma(1 + z) for |z| <= kSeriesRadius.
double log_gamma_1p_series(double z) {
  // Horner on sum_{k>=2} (-1)^k zeta(k)/k z^k
  double acc = 0.0;
  for (std::size_t i = kZeta.size(); i-- > 0;) {
    const double k = static_cast<double>(i + 2);
    const double coeff = ((i % 2 == 0) ? 1.0 : -1.0) * kZeta[i] / k;
    acc = acc * z + coeff;
  }
  return -kEulerGamma * z + acc * z * z;
}

double lanczos_log_gamma(double x) {
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

}  // namespace

PositiveReal::PositiveReal(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError("expected a positive finite argument, got " + std::to_string(value));
  }
}

double gamma(PositiveReal arg) {
  double x = arg.value();
  if (x > 170.0) {
    throw OverflowError("gamma(" + std::to_string(x) + ") overflows; use log_gamma");
  }
  double scale = 1.0;
  if (x < 0.5) {
    scale = 1.0 / x;
    x += 1.0;
  }
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  // t^(z+0.5) split in two halves so it does not overflow before exp(-t) is applied.
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return scale * std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * lanczos_sum(z);
}

double log_gamma(PositiveReal arg) {
  const double x = arg.value();
  if (x == 1.0 || x == 2.0) {
    return 0.0;
  }
  if (std::abs(x - 1.0) <= kSeriesRadius) {
    return log_gamma_1p_series(x - 1.0);
  }
  if (std::abs(x - 2.0) <= kSeriesRadius) {
    const double z = x - 2.0;
    return std::log1p(z) + log_gamma_1p_series(z);
  }
  if (x < 0.5) {
    return log_gamma(x + 1.0) - std::log(x);
  }
  return lanczos_log_gamma(x);
}

double beta(PositiveReal w, PositiveReal v) {
  return std::exp(log_gamma(w) + log_gamma(v) - log_gamma(w.value() + v.value()));
}

double gamma_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw GammaPoleError("Gamma argument must be positive (got " + std::to_string(a) + ", " +
                         std::to_string(b) + ")");
  }
  return std::exp(log_gamma(a) - log_gamma(b));
}

}  // namespace hilfer::specfun

#pragma once

#include <cmath>

inline double rel_err(double got, double want) {
  return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

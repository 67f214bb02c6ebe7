#pragma once

#include "hilfer/wellposed.hpp"

namespace hilfer::reference {

/// Published constants for the worked example (T = 1, alpha = 4/3, beta = 5/6, L = 1/50).
struct PublishedConstants {
  double gamma = 17.0 / 9.0;
  double delta = -0.029801394;
  double omega = 43.74995072;
  double lambda = 42.91006582;
  double l_omega = 0.8749990144;
  double l_lambda = 0.8582013164;
};

/// The worked example with f(t,x) = |x| / (25 sqrt(4 + t^2) (1 + |x|)), built in code.
wellposed::ProblemSpec worked_example();

/// Same boundary data with f(t,x) = 1/(10 + t) + x/50, whose solution is not zero.
wellposed::ProblemSpec worked_example_nontrivial();

}  // namespace hilfer::reference

#include "hilfer/reference.hpp"

namespace hilfer::reference {

namespace {

wellposed::LinearProblem worked_example_linear() {
  wellposed::LinearProblem p;
  p.alpha = 4.0 / 3.0;
  p.beta = 5.0 / 6.0;
  p.horizon_T = 1.0;
  p.terms = {
      {1.0 / 3.0, 1.0 / 5.0, 1.0 / 4.0, 3.0 / 7.0, 5.0 / 4.0},
      {2.0 / 5.0, 2.0 / 9.0, 2.0 / 3.0, 5.0 / 8.0, 3.0 / 2.0},
      {5.0 / 6.0, 1.0 / 3.0, 1.0 / 6.0, 1.0 / 5.0, 2.0 / 7.0},
  };
  return p;
}

}  // namespace

wellposed::ProblemSpec worked_example() {
  wellposed::ProblemSpec spec;
  spec.label = "worked example: Hilfer (4/3, 5/6) with three Erdelyi-Kober terms";
  spec.linear = worked_example_linear();
  spec.rhs_text = "abs(x)/(25*sqrt(4+t^2)*(1+abs(x)))";
  spec.rhs = exprlang::parse(spec.rhs_text);
  spec.psi_text = "1/(25*sqrt(4+t^2))";
  spec.psi = exprlang::parse(spec.psi_text);
  spec.bounds.lipschitz_L = 1.0 / 50.0;
  spec.bounds.m_const = 0.0;
  spec.bounds.psi_norm = 1.0 / 50.0;
  spec.bounds.lipschitz_user_supplied = true;
  spec.bounds.m_user_supplied = true;
  spec.bounds.psi_user_supplied = true;
  return spec;
}

wellposed::ProblemSpec worked_example_nontrivial() {
  wellposed::ProblemSpec spec;
  spec.label = "worked example boundary data with f(t,x) = 1/(10+t) + x/50";
  spec.linear = worked_example_linear();
  spec.rhs_text = "1/(10+t) + x/50";
  spec.rhs = exprlang::parse(spec.rhs_text);
  spec.bounds.lipschitz_L = 1.0 / 50.0;
  spec.bounds.m_const = 0.1;
  spec.bounds.lipschitz_user_supplied = true;
  spec.bounds.m_user_supplied = true;
  return spec;
}

}  // namespace hilfer::reference

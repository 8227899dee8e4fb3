#pragma once

#include <Eigen/Dense>
#include <functional>

namespace cdpf::filter {

// Embedded 5(4) pair (Tsitouras coefficients) with PI step-size control.
struct OdeConfig {
  double rel_tol = 1e-3;
  double abs_tol = 1e-6;
  long max_steps = 100000;

  // controller constants (alpha/beta are the PI exponents for order 5)
  double safety = 0.9;
  double fac_min = 0.2;
  double fac_max = 10.0;
  double alpha = 0.14;
  double beta = 0.08;
};

struct OdeStats {
  long accepted = 0;
  long rejected = 0;
};

// Integrates y' = f(t, y) in place from t0 to t1 (t1 > t0).  A right-hand
// side may throw to reject a trial step; the controller then shrinks the
// step.  Throws PredictionFailureError on step-size underflow or when the
// step budget is exhausted.  Rethrows the right-hand side's exception if the
// initial state itself is invalid.
OdeStats integrate_adaptive(
    const std::function<void(double, const Eigen::VectorXd&, Eigen::VectorXd&)>& f,
    Eigen::VectorXd& y, double t0, double t1, const OdeConfig& cfg);

}  // namespace cdpf::filter

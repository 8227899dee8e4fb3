#pragma once

#include <Eigen/Dense>

#include "cdpf/expfam/family.hpp"
#include "cdpf/filter/ode45.hpp"
#include "cdpf/filter/regularizer.hpp"
#include "cdpf/models/measurement.hpp"
#include "cdpf/models/sde.hpp"

namespace cdpf::filter {

struct FilterState {
  expfam::NaturalParams theta;
  quad::BijectionParams xi;
  Eigen::VectorXd eta;  // cached E[c]
  double psi = 0.0;     // cached psi^N(theta) at xi
  double t = 0.0;
};

// w = truncated natural gradient of the Fisher matrix applied to v.
// (declared in regularizer.hpp; re-exported here for callers of the filter)

// Prediction: integrates the coupled (theta, eta, mu, Sigma) system over
// `horizon` with the embedded RK pair; the bijection follows the moment
// components so the quadrature tracks the density.
FilterState predict(const FilterState& state, double horizon,
                    const models::SdeModel& model,
                    const expfam::StatisticsBasis& basis,
                    const quad::SparseGrid& grid, const OdeConfig& ode,
                    const RegularizerConfig& reg);

// Exact conjugate update: theta + K1 y - theta_l0.
expfam::NaturalParams bayes_update(const expfam::NaturalParams& theta_minus,
                                   const Eigen::VectorXd& y,
                                   const models::MeasurementModel& meas);

// Post-update refresh (eta at the pre-update bijection, then the bijection
// and psi from the new moments).
FilterState finalize_update(const expfam::NaturalParams& theta_k,
                            const quad::BijectionParams& xi_minus, double t,
                            const expfam::StatisticsBasis& basis,
                            const quad::SparseGrid& grid);

// One measurement cycle: predict over dt, update, refresh eta / psi / xi.
FilterState filter_step(const FilterState& state, const Eigen::VectorXd& y,
                        double dt, const models::SdeModel& model,
                        const expfam::StatisticsBasis& basis,
                        const quad::SparseGrid& grid,
                        const models::MeasurementModel& meas,
                        const OdeConfig& ode, const RegularizerConfig& reg);

struct InitConfig {
  double tol = 1e-6;
  int max_iter = 200;
  double gamma = 1.0;
  RegularizerConfig reg{1e-9, 1e3};
};

// Moment matching by natural-gradient ascent of theta^T m0 - psi^N(theta)
// (damped Newton; the Fisher matrix is the Hessian).  Converged when
// ||m0 - eta(theta)||_inf < tol; throws InitFailureError otherwise.
FilterState init_from_density(const Eigen::VectorXd& sample_moments,
                              const expfam::StatisticsBasis& basis,
                              const quad::SparseGrid& grid,
                              const quad::BijectionParams& xi0,
                              const InitConfig& cfg);

struct ProjectionError {
  double e1 = 0.0;     // local projection error of the prediction step
  double ratio = 0.0;  // E1^2 / E[(L*(p)/p)^2]
};

// E1^2 = E[(L*(p)/p)^2] - E[L(c)]^T g^-1 E[L(c)], evaluated as the weighted
// second moment of the pointwise tangent-fit residual and clamped at zero.
ProjectionError local_projection_error(const FilterState& state,
                                       const models::SdeModel& model,
                                       const expfam::StatisticsBasis& basis,
                                       const quad::SparseGrid& grid);

}  // namespace cdpf::filter

#pragma once

#include <Eigen/Dense>
#include <functional>

#include "cdpf/models/sde.hpp"
#include "cdpf/util/rng.hpp"

namespace cdpf::baselines {

// Stochastic (perturbed-observation) ensemble Kalman step with the sample
// cross-covariance form of the gain, so nonlinear h is supported directly.
// The innovation covariance is the predicted-observation sample covariance
// plus R, which keeps it invertible.
Eigen::MatrixXd enkf_step(
    const Eigen::MatrixXd& ensemble,  // d x N
    const models::SdeModel& model,
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& h_fn,
    const Eigen::MatrixXd& R, const Eigen::VectorXd& y, double dt,
    double sde_dt, Rng& rng);

}  // namespace cdpf::baselines

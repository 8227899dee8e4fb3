#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "cdpf/filter/ode45.hpp"
#include "cdpf/models/sde.hpp"
#include "cdpf/util/rng.hpp"

namespace cdpf::baselines {

struct GaussianMixture {
  Eigen::VectorXd weights;             // simplex
  std::vector<Eigen::VectorXd> means;
  std::vector<Eigen::MatrixXd> covs;   // SPD

  int size() const { return static_cast<int>(weights.size()); }
  int dim() const { return means.empty() ? 0 : static_cast<int>(means[0].size()); }

  double log_density(const Eigen::VectorXd& x) const;
  Eigen::VectorXd mean() const;
  // Draws n samples (d x n); used for sample-based metrics.
  Eigen::MatrixXd sample(int n, Rng& rng) const;
};

// Mixand weights are frozen between measurements; each mixand is propagated
// by the linearized moment equations dm = f(m), dP = F P + P F^T + a solved
// with the same embedded RK pair as the projection filter, then updated by
// an extended Kalman step.  Weights are rescaled by the innovation
// likelihoods and renormalized.
GaussianMixture gsf_step(
    const GaussianMixture& mix, const models::SdeModel& model,
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& h_fn,
    const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& h_jac,
    const Eigen::MatrixXd& R, const Eigen::VectorXd& y, double dt,
    const filter::OdeConfig& ode);

}  // namespace cdpf::baselines

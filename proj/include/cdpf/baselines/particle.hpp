#pragma once

#include <Eigen/Dense>
#include <functional>

#include "cdpf/models/sde.hpp"
#include "cdpf/util/rng.hpp"

namespace cdpf::baselines {

struct ParticleEnsemble {
  Eigen::MatrixXd particles;  // d x N
  Eigen::VectorXd weights;    // simplex

  Eigen::Index size() const { return particles.cols(); }
};

ParticleEnsemble make_uniform_ensemble(Eigen::MatrixXd particles);

// Offspring selection with a single uniform draw; with uniform weights every
// particle survives exactly once.
std::vector<int> systematic_resample_indices(const Eigen::VectorXd& weights,
                                             Rng& rng);

// Bootstrap step: Euler-Heun propagation with sde_dt substeps over dt,
// likelihood reweighting and systematic resampling (weights reset uniform).
// log_like(x) is the measurement log-likelihood of the current y at state x.
// Throws DegenerateLikelihoodError when every weight underflows to zero.
ParticleEnsemble pf_step(const ParticleEnsemble& ens,
                         const models::SdeModel& model,
                         const std::function<double(const Eigen::VectorXd&)>& log_like,
                         double dt, double sde_dt, Rng& rng);

}  // namespace cdpf::baselines

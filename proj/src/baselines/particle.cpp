#include "cdpf/baselines/particle.hpp"

#include <cmath>

#include "cdpf/util/errors.hpp"

namespace cdpf::baselines {

ParticleEnsemble make_uniform_ensemble(Eigen::MatrixXd particles) {
  ParticleEnsemble ens;
  const Eigen::Index n = particles.cols();
  ens.particles = std::move(particles);
  ens.weights = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  return ens;
}

std::vector<int> systematic_resample_indices(const Eigen::VectorXd& weights,
                                             Rng& rng) {
  const Eigen::Index n = weights.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  const double u0 = rng.uniform_open();
  double cum = weights[0];
  Eigen::Index j = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double u = (static_cast<double>(k) + u0) / static_cast<double>(n);
    while (u > cum && j + 1 < n) {
      ++j;
      cum += weights[j];
    }
    out[static_cast<std::size_t>(k)] = static_cast<int>(j);
  }
  return out;
}

ParticleEnsemble pf_step(
    const ParticleEnsemble& ens, const models::SdeModel& model,
    const std::function<double(const Eigen::VectorXd&)>& log_like, double dt,
    double sde_dt, Rng& rng) {
  const Eigen::Index n = ens.size();
  const int n_sub = static_cast<int>(std::llround(dt / sde_dt));
  if (n_sub < 1 || std::abs(n_sub * sde_dt - dt) > 1e-9 * dt) {
    throw std::invalid_argument("sde_dt must divide the measurement interval");
  }

  ParticleEnsemble next;
  next.particles = ens.particles;
  models::euler_heun_propagate(model, next.particles, sde_dt, n_sub, rng);

  Eigen::VectorXd logw(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    logw[i] = std::log(ens.weights[i]) + log_like(next.particles.col(i));
  }
  const double shift = logw.maxCoeff();
  if (!std::isfinite(shift)) {
    throw DegenerateLikelihoodError(
        "all particle weights vanished in the measurement update");
  }
  Eigen::VectorXd w = (logw.array() - shift).exp();
  const double total = w.sum();
  if (!(total > 0.0)) {
    throw DegenerateLikelihoodError(
        "particle weight normalization failed");
  }
  w /= total;

  const std::vector<int> idx = systematic_resample_indices(w, rng);
  ParticleEnsemble out;
  out.particles.resize(next.particles.rows(), n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.particles.col(i) = next.particles.col(idx[static_cast<std::size_t>(i)]);
  }
  out.weights = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  return out;
}

}  // namespace cdpf::baselines

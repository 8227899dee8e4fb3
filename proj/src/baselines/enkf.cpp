#include "cdpf/baselines/enkf.hpp"

#include <cmath>

namespace cdpf::baselines {

Eigen::MatrixXd enkf_step(
    const Eigen::MatrixXd& ensemble, const models::SdeModel& model,
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& h_fn,
    const Eigen::MatrixXd& R, const Eigen::VectorXd& y, double dt,
    double sde_dt, Rng& rng) {
  const Eigen::Index n = ensemble.cols();
  const Eigen::Index d = ensemble.rows();
  const Eigen::Index dy = y.size();
  const int n_sub = static_cast<int>(std::llround(dt / sde_dt));
  if (n_sub < 1 || std::abs(n_sub * sde_dt - dt) > 1e-9 * dt) {
    throw std::invalid_argument("sde_dt must divide the measurement interval");
  }

  Eigen::MatrixXd forecast = ensemble;
  models::euler_heun_propagate(model, forecast, sde_dt, n_sub, rng);

  Eigen::MatrixXd predicted(dy, n);
  for (Eigen::Index i = 0; i < n; ++i) predicted.col(i) = h_fn(forecast.col(i));

  const Eigen::VectorXd x_mean = forecast.rowwise().mean();
  const Eigen::VectorXd y_mean = predicted.rowwise().mean();
  const Eigen::MatrixXd ax = forecast.colwise() - x_mean;
  const Eigen::MatrixXd ay = predicted.colwise() - y_mean;
  const double scale = 1.0 / static_cast<double>(n - 1);
  const Eigen::MatrixXd c_xy = scale * ax * ay.transpose();
  const Eigen::MatrixXd c_yy = scale * ay * ay.transpose();

  const Eigen::LLT<Eigen::MatrixXd> s_llt(c_yy + R);
  // gain K = C_xy (C_yy + R)^-1, applied to perturbed innovations
  const Eigen::MatrixXd k_t = s_llt.solve(c_xy.transpose());

  const Eigen::LLT<Eigen::MatrixXd> r_llt(R);
  const Eigen::MatrixXd r_chol = r_llt.matrixL();
  Eigen::MatrixXd analysis(d, n);
  Eigen::VectorXd noise(dy);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < dy; ++j) noise[j] = rng.normal();
    const Eigen::VectorXd innovation =
        y + r_chol * noise - predicted.col(i);
    analysis.col(i) = forecast.col(i) + k_t.transpose() * innovation;
  }
  return analysis;
}

}  // namespace cdpf::baselines

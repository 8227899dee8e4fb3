#include "cdpf/expfam/family.hpp"

#include <cmath>

#include "cdpf/util/errors.hpp"
#include "cdpf/util/sum.hpp"

namespace cdpf::expfam {

QuadratureEval eval_family(const NaturalParams& theta,
                           const StatisticsBasis& basis,
                           const quad::SparseGrid& grid,
                           const quad::BijectionParams& xi) {
  if (grid.dim != basis.dim()) {
    throw std::invalid_argument("grid/basis dimension mismatch");
  }
  if (theta.theta.size() != basis.size()) {
    throw std::invalid_argument("theta/basis size mismatch");
  }
  QuadratureEval ev;
  ev.points = quad::map_to_state_space(grid, xi);
  ev.c_values = basis.values_at(ev.points);

  const Eigen::Index n = grid.size();
  Eigen::VectorXd expo = ev.c_values.transpose() * theta.theta;
  const double shift = expo.maxCoeff();
  if (!std::isfinite(shift)) {
    throw InvalidParameterError("non-finite exponent in psi^N evaluation");
  }
  const double jac = xi.jacobian();
  std::vector<double> terms(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    terms[static_cast<std::size_t>(i)] =
        grid.gauss_weights(i) * std::exp(expo(i) - shift) * jac;
  }
  const double total = pairwise_sum(terms);
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw InvalidParameterError(
        "psi^N quadrature sum is not positive and finite; theta is outside "
        "the representable parameter domain");
  }
  ev.psi = shift + std::log(total);
  ev.measure.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    ev.measure(i) = terms[static_cast<std::size_t>(i)] / total;
  }
  return ev;
}

double log_partition(const NaturalParams& theta, const StatisticsBasis& basis,
                     const quad::SparseGrid& grid,
                     const quad::BijectionParams& xi) {
  return eval_family(theta, basis, grid, xi).psi;
}

Eigen::VectorXd expectation(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& phi,
    int phi_dim, const NaturalParams& theta, const StatisticsBasis& basis,
    const quad::SparseGrid& grid, const quad::BijectionParams& xi) {
  const QuadratureEval ev = eval_family(theta, basis, grid, xi);
  const Eigen::Index n = ev.measure.size();
  Eigen::MatrixXd vals(phi_dim, n);
  for (Eigen::Index i = 0; i < n; ++i) vals.col(i) = phi(ev.points.col(i));

  Eigen::VectorXd out(phi_dim);
  std::vector<double> terms(static_cast<std::size_t>(n));
  for (int k = 0; k < phi_dim; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      terms[static_cast<std::size_t>(i)] = vals(k, i) * ev.measure(i);
    }
    out(k) = pairwise_sum(terms);
  }
  return out;
}

MomentSet moments_from_eval(const QuadratureEval& ev) {
  MomentSet m;
  m.psi = ev.psi;
  m.eta = ev.c_values * ev.measure;
  const Eigen::MatrixXd weighted =
      ev.c_values.array().rowwise() * ev.measure.transpose().array();
  Eigen::MatrixXd second = weighted * ev.c_values.transpose();
  m.fisher = second - m.eta * m.eta.transpose();
  m.fisher = 0.5 * (m.fisher + m.fisher.transpose()).eval();
  return m;
}

MomentSet moments(const NaturalParams& theta, const StatisticsBasis& basis,
                  const quad::SparseGrid& grid,
                  const quad::BijectionParams& xi) {
  return moments_from_eval(eval_family(theta, basis, grid, xi));
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> mean_cov(
    const Eigen::VectorXd& eta, const StatisticsBasis& basis) {
  Eigen::VectorXd mu = basis.mean_map() * eta;
  Eigen::MatrixXd sigma = basis.second_moment_map(eta) - mu * mu.transpose();
  sigma = 0.5 * (sigma + sigma.transpose()).eval();
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw DegenerateCovarianceError(
        "moment covariance is not positive definite");
  }
  return {std::move(mu), std::move(sigma)};
}

double log_density(const NaturalParams& theta, const StatisticsBasis& basis,
                   const Eigen::VectorXd& x, double psi) {
  return basis.values(x).dot(theta.theta) - psi;
}

Eigen::VectorXd gaussian_theta(const StatisticsBasis& basis,
                               const Eigen::VectorXd& mu,
                               const Eigen::MatrixXd& sigma) {
  const int d = basis.dim();
  const Eigen::MatrixXd prec = sigma.llt().solve(Eigen::MatrixXd::Identity(d, d));
  const Eigen::VectorXd lin = prec * mu;
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(basis.size());
  for (int i = 0; i < d; ++i) {
    Eigen::VectorXi ei = Eigen::VectorXi::Zero(d);
    ei[i] = 1;
    theta[basis.find_entry(ei, Eigen::VectorXi::Zero(d))] += lin[i];
    for (int j = 0; j <= i; ++j) {
      Eigen::VectorXi eij = Eigen::VectorXi::Zero(d);
      eij[i] += 1;
      eij[j] += 1;
      const int k = basis.find_entry(eij, Eigen::VectorXi::Zero(d));
      theta[k] += (i == j) ? -0.5 * prec(i, i) : -prec(i, j);
    }
  }
  return theta;
}

}  // namespace cdpf::expfam

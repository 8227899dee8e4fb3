#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "cdpf/expfam/basis.hpp"

namespace cdpf::models {

// Discrete observation y = h(x) + v, v ~ N(0, R), with h = H^T c_h for a
// sub-vector c_h of the natural statistics.  T1/T2 realize c_h = T1 c and
// c_h (x) c_h = T2 c; K1 and theta_l0 are the precomputed pieces of the
// conjugate update.
struct MeasurementModel {
  std::vector<int> h_index;  // indices of c_h inside c
  Eigen::MatrixXd H;         // m_h x d_y
  Eigen::MatrixXd R;         // d_y x d_y, SPD
  Eigen::MatrixXd T1;        // m_h x m
  Eigen::MatrixXd T2;        // m_h^2 x m
  Eigen::MatrixXd K1;        // m x d_y   (T1^T H R^-1)
  Eigen::VectorXd theta_l0;  // m         (1/2 T2^T vec(H R^-1 H^T))

  // Direct evaluators for the sample-based filters.
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> h_fn;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> h_jac;

  // cached factorization pieces of R for the Gaussian likelihood
  Eigen::MatrixXd r_chol_inv;
  double r_log_norm = 0.0;  // -log det L - d/2 log(2 pi)

  int obs_dim() const { return static_cast<int>(R.rows()); }

  // Gaussian measurement log-likelihood log N(y; h(x), R).
  double log_likelihood(const Eigen::VectorXd& y,
                        const Eigen::VectorXd& x) const;
};

// Builds the selection matrices and the precomputed update terms.  Every
// pairwise product (c_h)_i (c_h)_j must reduce to a single basis entry;
// otherwise a NotConjugateError naming the missing statistic is thrown.
MeasurementModel build_conjugate_maps(const expfam::StatisticsBasis& basis,
                                      const std::vector<int>& h_index,
                                      const Eigen::MatrixXd& H,
                                      const Eigen::MatrixXd& R);

}  // namespace cdpf::models

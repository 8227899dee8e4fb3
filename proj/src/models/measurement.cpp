#include "cdpf/models/measurement.hpp"

#include <cmath>

#include "cdpf/util/errors.hpp"

namespace cdpf::models {

double MeasurementModel::log_likelihood(const Eigen::VectorXd& y,
                                        const Eigen::VectorXd& x) const {
  return -0.5 * (r_chol_inv * (y - h_fn(x))).squaredNorm() + r_log_norm;
}

MeasurementModel build_conjugate_maps(const expfam::StatisticsBasis& basis,
                                      const std::vector<int>& h_index,
                                      const Eigen::MatrixXd& H,
                                      const Eigen::MatrixXd& R) {
  const int m = basis.size();
  const int mh = static_cast<int>(h_index.size());
  if (H.rows() != mh) throw std::invalid_argument("H must have m_h rows");
  if (R.rows() != R.cols() || R.rows() != H.cols()) {
    throw std::invalid_argument("R must be square with dim matching H columns");
  }

  MeasurementModel mm;
  mm.h_index = h_index;
  mm.H = H;
  mm.R = R;

  mm.T1 = Eigen::MatrixXd::Zero(mh, m);
  for (int i = 0; i < mh; ++i) mm.T1(i, h_index[i]) = 1.0;

  mm.T2 = Eigen::MatrixXd::Zero(mh * mh, m);
  for (int i = 0; i < mh; ++i) {
    for (int j = 0; j < mh; ++j) {
      const int k = basis.find_product(h_index[i], h_index[j]);
      if (k < 0) {
        throw NotConjugateError(basis.label(h_index[i]) + "*" +
                                basis.label(h_index[j]));
      }
      mm.T2(i * mh + j, k) = 1.0;
    }
  }

  const Eigen::MatrixXd r_inv =
      R.llt().solve(Eigen::MatrixXd::Identity(R.rows(), R.cols()));
  mm.K1 = mm.T1.transpose() * H * r_inv;

  const Eigen::MatrixXd b = H * r_inv * H.transpose();  // m_h x m_h, symmetric
  Eigen::VectorXd vec_b(mh * mh);
  for (int i = 0; i < mh; ++i) {
    for (int j = 0; j < mh; ++j) vec_b[i * mh + j] = b(i, j);
  }
  mm.theta_l0 = 0.5 * mm.T2.transpose() * vec_b;

  const Eigen::MatrixXd r_chol = Eigen::LLT<Eigen::MatrixXd>(R).matrixL();
  mm.r_chol_inv = r_chol.inverse();
  double log_det = 0.0;
  for (int i = 0; i < R.rows(); ++i) log_det += std::log(r_chol(i, i));
  mm.r_log_norm = -log_det - 0.5 * static_cast<double>(R.rows()) *
                                 std::log(2.0 * 3.14159265358979323846);
  return mm;
}

}  // namespace cdpf::models

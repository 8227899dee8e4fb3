#include "cdpf/filter/regularizer.hpp"

#include <cmath>
#include <stdexcept>

namespace cdpf::filter {

Eigen::VectorXd truncated_natural_gradient(const Eigen::MatrixXd& g,
                                           const Eigen::VectorXd& v,
                                           const RegularizerConfig& cfg) {
  const Eigen::MatrixXd sym = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("Fisher matrix eigendecomposition failed");
  }
  Eigen::VectorXd s = Eigen::VectorXd::Zero(v.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam > cfg.epsilon) s(i) = 1.0 / lam;
  }
  Eigen::VectorXd w =
      es.eigenvectors() *
      (s.array() * (es.eigenvectors().transpose() * v).array()).matrix();
  const double norm = w.norm();
  if (norm > cfg.max_norm) w *= cfg.max_norm / norm;
  return w;
}

}  // namespace cdpf::filter

#pragma once

#include <Eigen/Dense>
#include <limits>

namespace cdpf::filter {

// Eigenvalue threshold and output norm cap for the truncated natural
// gradient.  epsilon = -inf, max_norm = inf disables the regularization
// entirely (the "Proj" preset).
struct RegularizerConfig {
  double epsilon = 1e-5;
  double max_norm = 1e2;

  static RegularizerConfig none() {
    return {-std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  }
  static RegularizerConfig nonnegative() {
    return {0.0, std::numeric_limits<double>::infinity()};
  }
  static RegularizerConfig bounded() { return {1e-5, 1e2}; }
};

// w = V S_eps V^T v where S_eps inverts only eigenvalues above epsilon,
// followed by norm clipping to max_norm.  g is symmetrized first.
Eigen::VectorXd truncated_natural_gradient(const Eigen::MatrixXd& g,
                                           const Eigen::VectorXd& v,
                                           const RegularizerConfig& cfg);

}  // namespace cdpf::filter

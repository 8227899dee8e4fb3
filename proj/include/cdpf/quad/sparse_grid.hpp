#pragma once

#include <Eigen/Dense>
#include <functional>

#include "cdpf/quad/rules.hpp"

namespace cdpf::quad {

// Parameters of the adaptive Gaussian bijection phi_xi(y) = mu + sqrt(2) L y.
struct BijectionParams {
  Eigen::VectorXd mu;
  Eigen::MatrixXd sigma;  // symmetric positive definite
  Eigen::MatrixXd chol;   // lower triangular, sigma = chol * chol^T

  // Symmetrizes sigma and factorizes it.  Throws DegenerateCovarianceError
  // if the Cholesky factorization fails.
  static BijectionParams from_moments(Eigen::VectorXd mu,
                                      Eigen::MatrixXd sigma);

  int dim() const { return static_cast<int>(mu.size()); }

  // det(d phi_xi / d y) = 2^(d/2) det(L)
  double jacobian() const;
};

// Smolyak sparse grid on (-1,1)^d together with its Gaussian-transformed
// image: gauss_nodes = erfinv(nodes) componentwise and
// gauss_weights[i] = (sqrt(pi)/2)^d exp(|y_i|^2) weights[i].
struct SparseGrid {
  int dim = 0;
  int level = 0;
  Rule rule = Rule::kGaussPatterson;
  Eigen::MatrixXd nodes;        // dim x N, columns are nodes
  Eigen::VectorXd weights;      // N
  Eigen::MatrixXd gauss_nodes;  // dim x N
  Eigen::VectorXd gauss_weights;

  Eigen::Index size() const { return weights.size(); }
};

// Nested-rule Smolyak construction over the index set {|l|_1 <= level} with
// the standard combination-technique coefficients; coincident nodes are
// merged by exact integer keys (per-dimension positions in the finest
// unidimensional table), never by floating comparison.
SparseGrid build_grid(int dim, int level, Rule rule);

// phi_xi applied to every transformed node; returns dim x N.
Eigen::MatrixXd map_to_state_space(const SparseGrid& grid,
                                   const BijectionParams& xi);

// Q^d_N[f]: weighted sum of f over the transformed nodes, accumulated in
// index order with pairwise summation.  Throws IntegrationDomainError if f
// is non-finite at any node.
double integrate(const std::function<double(const Eigen::VectorXd&)>& f,
                 const SparseGrid& grid);

}  // namespace cdpf::quad

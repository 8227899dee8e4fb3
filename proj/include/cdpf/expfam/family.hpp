#pragma once

#include <Eigen/Dense>
#include <functional>

#include "cdpf/expfam/basis.hpp"
#include "cdpf/quad/sparse_grid.hpp"

namespace cdpf::expfam {

struct NaturalParams {
  Eigen::VectorXd theta;
};

struct MomentSet {
  Eigen::VectorXd eta;     // E[c]
  Eigen::MatrixXd fisher;  // E[c c^T] - eta eta^T, symmetrized
  double psi = 0.0;        // psi^N(theta)
};

// Shared quadrature evaluation of one density p_theta under a bijection.
// `measure` is the self-normalized signed discrete measure on the grid nodes
// (sums to one bitwise); every expectation below is a weighted sum with it.
struct QuadratureEval {
  Eigen::MatrixXd points;   // mapped nodes, d x N
  Eigen::MatrixXd c_values; // m x N
  Eigen::VectorXd measure;  // N
  double psi = 0.0;
};

// Throws InvalidParameterError when the quadrature sum for psi^N is
// non-positive or non-finite (theta outside the representable domain).
QuadratureEval eval_family(const NaturalParams& theta,
                           const StatisticsBasis& basis,
                           const quad::SparseGrid& grid,
                           const quad::BijectionParams& xi);

// log of Q^d_N[exp(c^T theta) * 2^(d/2) det(L)], max-exponent shifted.
double log_partition(const NaturalParams& theta, const StatisticsBasis& basis,
                     const quad::SparseGrid& grid,
                     const quad::BijectionParams& xi);

// Self-normalized expectation of a vector function; expectation of the
// constant 1 is exactly 1.
Eigen::VectorXd expectation(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& phi,
    int phi_dim, const NaturalParams& theta, const StatisticsBasis& basis,
    const quad::SparseGrid& grid, const quad::BijectionParams& xi);

MomentSet moments(const NaturalParams& theta, const StatisticsBasis& basis,
                  const quad::SparseGrid& grid,
                  const quad::BijectionParams& xi);

// Moments from an existing evaluation (used by the prediction ODE right-hand
// side, which needs the node values as well).
MomentSet moments_from_eval(const QuadratureEval& eval);

// mu = T_mu eta, Sigma = Phi_Sigma(eta) - mu mu^T (symmetrized).  Throws
// DegenerateCovarianceError when Sigma is not positive definite.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> mean_cov(
    const Eigen::VectorXd& eta, const StatisticsBasis& basis);

// c(x)^T theta - psi
double log_density(const NaturalParams& theta, const StatisticsBasis& basis,
                   const Eigen::VectorXd& x, double psi);

// Natural parameters of N(mu, sigma) inside this basis: coefficients on the
// x_i and second-order entries, zero elsewhere.
Eigen::VectorXd gaussian_theta(const StatisticsBasis& basis,
                               const Eigen::VectorXd& mu,
                               const Eigen::MatrixXd& sigma);

}  // namespace cdpf::expfam

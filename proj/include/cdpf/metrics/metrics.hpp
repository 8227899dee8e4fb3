#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

#include "cdpf/expfam/basis.hpp"
#include "cdpf/quad/sparse_grid.hpp"
#include "cdpf/util/rng.hpp"

namespace cdpf::metrics {

using LogDensity = std::function<double(const Eigen::VectorXd&)>;

// Hellinger distance on the 3-Mahalanobis ball of the reference Gaussian
// `region`, computed on a whitened tensor grid (resolution points per axis)
// and clipped to [0, 1].  Supports dim 1 and 2.
double hellinger(const LogDensity& log_p, const LogDensity& log_q,
                 const quad::BijectionParams& region, int resolution = 201);

// Precomputed integration points/weights for hellinger; lets callers
// evaluate one side once and compare it against several densities.
struct HellingerPlan {
  Eigen::MatrixXd points;   // d x M, masked to the 3-Mahalanobis ball
  Eigen::VectorXd weights;  // trapezoid weights times the cell volume
};
HellingerPlan make_hellinger_plan(const quad::BijectionParams& region,
                                  int resolution = 201);
// sqrt of the density at the plan's points (log floored before exp)
Eigen::VectorXd sqrt_density_at(const HellingerPlan& plan,
                                const LogDensity& log_p);
double hellinger_from_sqrts(const HellingerPlan& plan,
                            const Eigen::VectorXd& sqrt_p,
                            const Eigen::VectorXd& sqrt_q);

// Sliced Wasserstein-1 between two sample sets (columns are samples):
// average 1D W1 over n_slices uniformly random directions.  Equal-size sets
// use the exact sorted-sample formula; otherwise the piecewise-linear
// empirical quantile functions are integrated exactly.
double sliced_w1(const Eigen::MatrixXd& samples_p,
                 const Eigen::MatrixXd& samples_q, int n_slices, Rng& rng);

// ||c(x_true) - eta||^2 for one run; the harness aggregates over seeds.
double nmse_sq_err(const Eigen::VectorXd& true_state,
                   const Eigen::VectorXd& eta,
                   const expfam::StatisticsBasis& basis);

// Mean negative log density over the reference samples, each log floored at
// -745 so tail samples cannot produce infinities.
double cross_entropy(const LogDensity& log_q, const Eigen::MatrixXd& samples_p);

// Cumulative trapezoidal integral of E1/(2 sqrt(2)) along (t, E1) samples.
std::vector<std::pair<double, double>> hellinger_rate_ub(
    const std::vector<std::pair<double, double>>& e1_series);

// Random-walk Metropolis targeting an unnormalized log density, started at
// mu with proposal covariance sigma/d; 10x thinning after burn-in.  Returns
// d x n samples; acceptance rate reported through *acc_rate when given.
Eigen::MatrixXd metropolis_sample(const LogDensity& log_target,
                                  const Eigen::VectorXd& mu,
                                  const Eigen::MatrixXd& sigma, int n,
                                  Rng& rng, int burn_in = 1000, int thin = 10,
                                  double* acc_rate = nullptr);

// Gaussian kernel density estimate with the Silverman bandwidth matrix.
class GaussianKde {
 public:
  explicit GaussianKde(Eigen::MatrixXd samples);  // d x N
  double log_density(const Eigen::VectorXd& x) const;

 private:
  Eigen::MatrixXd samples_;
  Eigen::MatrixXd bw_chol_inv_;
  double log_norm_ = 0.0;
};

// Deterministic stride subsampling (keeps at most cap columns).
Eigen::MatrixXd subsample_columns(const Eigen::MatrixXd& samples, int cap);

}  // namespace cdpf::metrics

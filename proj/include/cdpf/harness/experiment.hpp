#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cdpf/harness/config.hpp"
#include "cdpf/metrics/metrics.hpp"
#include "cdpf/models/measurement.hpp"
#include "cdpf/models/sde.hpp"

namespace cdpf::harness {

struct Truth {
  Eigen::MatrixXd states;        // d x (K+1); column 0 is x0
  Eigen::MatrixXd measurements;  // d_y x K; column k-1 is y_k
};

// Seeded trajectory and measurement record: x0 from the initial mixture,
// Euler-Heun path at sde_dt, measurements every measurement.dt.
Truth generate_truth(const ExperimentConfig& cfg, std::uint64_t seed);

models::SdeModel make_model(const ModelSpec& spec);

// Resolves the measurement function against the basis and precomputes the
// conjugate update terms.
models::MeasurementModel make_measurement(const ExperimentConfig& cfg,
                                          const expfam::StatisticsBasis& basis);

// E_{p0}[c] for a Gaussian mixture via per-mixand transformed quadrature.
Eigen::VectorXd mixture_moments(const expfam::StatisticsBasis& basis,
                                const quad::SparseGrid& grid,
                                const MixtureSpec& p0);

// Exact mixture mean / covariance.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> mixture_mean_cov(
    const MixtureSpec& p0);

// Runs every seed (worker pool sized by CDPF_WORKERS or the hardware
// parallelism), writes <out_dir>/results.csv and <out_dir>/summary.json plus
// initial density dumps under <out_dir>/densities/.  Partial failures are
// recorded in the summary; the call itself only throws on configuration or
// I/O errors.
void run_experiment(const ExperimentConfig& cfg, std::ostream* log = nullptr);

// Debug dump of a log-density on the whitened grid of `region` (dim <= 2):
// CSV rows x1[,x2],log_density at 17 significant digits.
void dump_density_grid(const metrics::LogDensity& log_density,
                       const quad::BijectionParams& region, int resolution,
                       const std::string& path);

// Per-coordinate marginal samples (any dimension), one row per sample.
void dump_marginal_samples(const Eigen::MatrixXd& samples,
                           const std::string& path);

// CSV dump of a sparse grid: idx, node components, weight, gauss weight.
void dump_grid_csv(const quad::SparseGrid& grid, std::ostream& os);

struct KalmanCheck {
  double max_mean_err = 0.0;
  double max_var_err = 0.0;
  double max_e1 = 0.0;
  bool pass = false;
};

// Linear-Gaussian cross-validation: the projection filter on an OU model
// against the closed-form Kalman recursion (doubles as an install self-test).
KalmanCheck run_kalman_crosscheck(int n_steps = 10, std::uint64_t seed = 7);

}  // namespace cdpf::harness

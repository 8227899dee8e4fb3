#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "cdpf/expfam/basis.hpp"
#include "cdpf/util/rng.hpp"

namespace cdpf::models {

// Diffusion dx = f(x) dt + rho(x) dW (Stratonovich for path simulation; the
// drift functions here carry no Ito correction because every built-in model
// has state-independent rho, where the two interpretations coincide).
struct SdeModel {
  std::string name;
  int dim = 0;
  int noise_dim = 0;

  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> drift;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> diffusion;  // d x dw
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> drift_jacobian;
  std::function<double(const Eigen::VectorXd&)> drift_divergence;

  bool constant_diffusion = true;

  Eigen::MatrixXd diffusion_square(const Eigen::VectorXd& x) const {
    const Eigen::MatrixXd rho = diffusion(x);
    return rho * rho.transpose();
  }
};

// dx = -rate * x dt + sigma dW on R^dim
SdeModel make_ou(int dim, double rate, double sigma);

// Van der Pol oscillator with noise on the velocity component.
SdeModel make_vdp(double mu_s, double sigma_w);

struct FhnParams {
  double a = 0.7;
  double b = 0.8;
  double tau = 12.5;
  double coupling = 0.1;  // eps_{1,2} = eps_{2,1}
  double i1 = 0.25;
  double i2 = 0.5;
  double sigma_w = 1.0;
};

// Two electrically coupled FitzHugh-Nagumo neurons (4 states).
SdeModel make_fhn(const FhnParams& p);

// L(c_i)(x) = f(x).grad c_i(x) + 0.5 tr(a(x) hess c_i(x)) for every entry.
std::vector<std::function<double(const Eigen::VectorXd&)>> generator_apply(
    const SdeModel& model, const expfam::StatisticsBasis& basis);

// Batched generator evaluation at the columns of X; returns m x N.
Eigen::MatrixXd generator_values(const SdeModel& model,
                                 const expfam::StatisticsBasis& basis,
                                 const Eigen::MatrixXd& X);

// Stratonovich Euler-Heun predictor-corrector path; the same Brownian
// increments drive predictor and corrector.  Returns d x (n_steps + 1).
Eigen::MatrixXd euler_heun_path(const SdeModel& model,
                                const Eigen::VectorXd& x0, double dt,
                                int n_steps, Rng& rng);

// Single Euler-Heun update step (shared by path generation and the
// sample-based filters).
Eigen::VectorXd euler_heun_step(const SdeModel& model,
                                const Eigen::VectorXd& x, double dt,
                                const Eigen::VectorXd& dw);

// Propagates every column of `states` in place over n_sub substeps of size
// dt, drawing the Brownian increments column-by-column from rng (the same
// draw order as per-particle euler_heun_path).
void euler_heun_propagate(const SdeModel& model, Eigen::MatrixXd& states,
                          double dt, int n_sub, Rng& rng);

}  // namespace cdpf::models

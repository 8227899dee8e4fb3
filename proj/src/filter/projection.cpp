#include "cdpf/filter/projection.hpp"

#include <cmath>
#include <vector>

#include "cdpf/util/errors.hpp"
#include "cdpf/util/sum.hpp"

namespace cdpf::filter {

namespace {

Eigen::VectorXd pack_lower(const Eigen::MatrixXd& s) {
  const int d = static_cast<int>(s.rows());
  Eigen::VectorXd v(d * (d + 1) / 2);
  int k = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) v[k++] = s(i, j);
  }
  return v;
}

Eigen::MatrixXd unpack_lower(const Eigen::VectorXd& v, int d) {
  Eigen::MatrixXd s(d, d);
  int k = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      s(i, j) = v[k];
      s(j, i) = v[k];
      ++k;
    }
  }
  return s;
}

// Bijection from moments with a single jitter retry.  At a trial stage of
// the adaptive integrator the second failure stays a DegenerateCovarianceError
// (the step is rejected and retried smaller); at an accepted state it aborts
// the run as a prediction failure -- the repair is bounded, never silent.
quad::BijectionParams bijection_with_repair(const Eigen::VectorXd& mu,
                                            const Eigen::MatrixXd& sigma,
                                            bool accepted_state) {
  try {
    return quad::BijectionParams::from_moments(mu, sigma);
  } catch (const DegenerateCovarianceError&) {
    const int d = static_cast<int>(mu.size());
    const double jitter = 1e-9 * sigma.trace() / d;
    try {
      return quad::BijectionParams::from_moments(
          mu, sigma + jitter * Eigen::MatrixXd::Identity(d, d));
    } catch (const DegenerateCovarianceError&) {
      if (accepted_state) {
        throw PredictionFailureError(
            "bijection covariance lost positive definiteness");
      }
      throw;
    }
  }
}

Eigen::VectorXd weighted_mean_rows(const Eigen::MatrixXd& values,
                                   const Eigen::VectorXd& measure) {
  return values * measure;
}

}  // namespace

FilterState predict(const FilterState& state, double horizon,
                    const models::SdeModel& model,
                    const expfam::StatisticsBasis& basis,
                    const quad::SparseGrid& grid, const OdeConfig& ode,
                    const RegularizerConfig& reg) {
  const int m = basis.size();
  const int d = basis.dim();
  const int nl = d * (d + 1) / 2;

  Eigen::VectorXd y(2 * m + d + nl);
  y.segment(0, m) = state.theta.theta;
  y.segment(m, m) = state.eta;
  y.segment(2 * m, d) = state.xi.mu;
  y.segment(2 * m + d, nl) = pack_lower(state.xi.sigma);

  auto rhs = [&](double /*t*/, const Eigen::VectorXd& yv, Eigen::VectorXd& dy) {
    const expfam::NaturalParams theta{yv.segment(0, m)};
    const Eigen::VectorXd mu = yv.segment(2 * m, d);
    const Eigen::MatrixXd sigma = unpack_lower(yv.segment(2 * m + d, nl), d);
    const quad::BijectionParams xi = bijection_with_repair(mu, sigma, false);

    const expfam::QuadratureEval ev = expfam::eval_family(theta, basis, grid, xi);
    const expfam::MomentSet mo = expfam::moments_from_eval(ev);
    const Eigen::MatrixXd gen = models::generator_values(model, basis, ev.points);
    const Eigen::VectorXd deta = weighted_mean_rows(gen, ev.measure);

    const Eigen::VectorXd dtheta = truncated_natural_gradient(mo.fisher, deta, reg);
    const Eigen::VectorXd dmu = basis.mean_map() * deta;
    Eigen::MatrixXd dsigma = basis.second_moment_map(deta) -
                             dmu * mu.transpose() - mu * dmu.transpose();

    dy.resize(yv.size());
    dy.segment(0, m) = dtheta;
    dy.segment(m, m) = deta;
    dy.segment(2 * m, d) = dmu;
    dy.segment(2 * m + d, nl) = pack_lower(dsigma);
  };

  integrate_adaptive(rhs, y, state.t, state.t + horizon, ode);

  FilterState out;
  out.theta.theta = y.segment(0, m);
  out.eta = y.segment(m, m);
  out.xi = bijection_with_repair(y.segment(2 * m, d),
                                 unpack_lower(y.segment(2 * m + d, nl), d),
                                 true);
  out.psi = expfam::log_partition(out.theta, basis, grid, out.xi);
  out.t = state.t + horizon;
  return out;
}

expfam::NaturalParams bayes_update(const expfam::NaturalParams& theta_minus,
                                   const Eigen::VectorXd& y,
                                   const models::MeasurementModel& meas) {
  return {theta_minus.theta + meas.K1 * y - meas.theta_l0};
}

FilterState finalize_update(const expfam::NaturalParams& theta_k,
                            const quad::BijectionParams& xi_minus, double t,
                            const expfam::StatisticsBasis& basis,
                            const quad::SparseGrid& grid) {
  const expfam::QuadratureEval ev =
      expfam::eval_family(theta_k, basis, grid, xi_minus);
  const Eigen::VectorXd eta_k = ev.c_values * ev.measure;
  auto [mu_k, sigma_k] = expfam::mean_cov(eta_k, basis);

  FilterState out;
  out.theta = theta_k;
  out.eta = eta_k;
  out.xi = quad::BijectionParams::from_moments(mu_k, sigma_k);
  out.psi = expfam::log_partition(theta_k, basis, grid, out.xi);
  out.t = t;
  return out;
}

FilterState filter_step(const FilterState& state, const Eigen::VectorXd& y,
                        double dt, const models::SdeModel& model,
                        const expfam::StatisticsBasis& basis,
                        const quad::SparseGrid& grid,
                        const models::MeasurementModel& meas,
                        const OdeConfig& ode, const RegularizerConfig& reg) {
  const FilterState prior = predict(state, dt, model, basis, grid, ode, reg);
  const expfam::NaturalParams theta_k = bayes_update(prior.theta, y, meas);
  return finalize_update(theta_k, prior.xi, prior.t, basis, grid);
}

FilterState init_from_density(const Eigen::VectorXd& sample_moments,
                              const expfam::StatisticsBasis& basis,
                              const quad::SparseGrid& grid,
                              const quad::BijectionParams& xi0,
                              const InitConfig& cfg) {
  expfam::NaturalParams theta{
      expfam::gaussian_theta(basis, xi0.mu, xi0.sigma)};
  quad::BijectionParams xi = xi0;

  double residual = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter <= cfg.max_iter; ++iter) {
    const expfam::MomentSet mo = expfam::moments(theta, basis, grid, xi);
    const Eigen::VectorXd gap = sample_moments - mo.eta;
    residual = gap.lpNorm<Eigen::Infinity>();
    if (residual < cfg.tol) {
      FilterState out;
      out.theta = theta;
      out.eta = mo.eta;
      out.xi = xi;
      out.psi = mo.psi;
      out.t = 0.0;
      return out;
    }
    if (iter == cfg.max_iter) break;

    const Eigen::VectorXd step =
        truncated_natural_gradient(mo.fisher, gap, cfg.reg);
    double gamma = cfg.gamma;
    bool moved = false;
    for (int halving = 0; halving < 25; ++halving) {
      const expfam::NaturalParams trial{theta.theta + gamma * step};
      try {
        (void)expfam::log_partition(trial, basis, grid, xi);
        theta = trial;
        moved = true;
        break;
      } catch (const InvalidParameterError&) {
        gamma *= 0.5;
      }
    }
    if (!moved) {
      throw InitFailureError(residual, iter);
    }
    // refresh the bijection from the current fit when the moments admit it
    try {
      const expfam::MomentSet mo2 = expfam::moments(theta, basis, grid, xi);
      auto [mu, sigma] = expfam::mean_cov(mo2.eta, basis);
      xi = quad::BijectionParams::from_moments(mu, sigma);
    } catch (const std::exception&) {
      // keep the previous bijection
    }
  }
  throw InitFailureError(residual, cfg.max_iter);
}

ProjectionError local_projection_error(const FilterState& state,
                                       const models::SdeModel& model,
                                       const expfam::StatisticsBasis& basis,
                                       const quad::SparseGrid& grid) {
  const int m = basis.size();
  const int d = basis.dim();
  if (!model.constant_diffusion) {
    throw std::invalid_argument(
        "local projection error requires state-independent diffusion "
        "(the divergence terms of a(x) are not wired up)");
  }
  const expfam::QuadratureEval ev =
      expfam::eval_family(state.theta, basis, grid, state.xi);
  const expfam::MomentSet mo = expfam::moments_from_eval(ev);
  const Eigen::MatrixXd a = model.diffusion_square(Eigen::VectorXd::Zero(d));

  // rho = L*(p_theta)/p_theta at the quadrature nodes, from the closed-form
  // log-density derivatives
  const Eigen::Index n = ev.measure.size();
  Eigen::VectorXd rho(n);
  Eigen::VectorXd grad(d);
  Eigen::MatrixXd hess(d, d);
  for (Eigen::Index c = 0; c < n; ++c) {
    const Eigen::VectorXd x = ev.points.col(c);
    Eigen::VectorXd dlogp = Eigen::VectorXd::Zero(d);
    Eigen::MatrixXd ddlogp = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < m; ++i) {
      basis.entry(i).gradient(x, grad);
      basis.entry(i).hessian(x, hess);
      dlogp += state.theta.theta[i] * grad;
      ddlogp += state.theta.theta[i] * hess;
    }
    const Eigen::VectorXd f = model.drift(x);
    const Eigen::MatrixXd curv = ddlogp + dlogp * dlogp.transpose();
    rho(c) = -model.drift_divergence(x) - f.dot(dlogp) +
             0.5 * (a.array() * curv.array()).sum();
  }

  // E[L(c)] evaluated through the integration-by-parts route E[(c-eta) rho];
  // the tangent fit then has exact discrete least-squares geometry, so the
  // subtracted quadratic form cancels pointwise instead of in the mean
  const Eigen::VectorXd rho_weighted =
      (rho.array() * ev.measure.array()).matrix();
  const Eigen::VectorXd gen_mean =
      ev.c_values * rho_weighted - mo.eta * rho_weighted.sum();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mo.fisher);
  const double floor = es.eigenvalues().cwiseAbs().maxCoeff() * 1e-13;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(m);
  for (int i = 0; i < m; ++i) {
    if (es.eigenvalues()(i) > floor) inv(i) = 1.0 / es.eigenvalues()(i);
  }
  const Eigen::VectorXd w =
      es.eigenvectors() *
      (inv.array() * (es.eigenvectors().transpose() * gen_mean).array())
          .matrix();

  std::vector<double> sq_rho(static_cast<std::size_t>(n));
  std::vector<double> sq_res(static_cast<std::size_t>(n));
  for (Eigen::Index c = 0; c < n; ++c) {
    const double res = rho(c) - (ev.c_values.col(c) - mo.eta).dot(w);
    sq_rho[static_cast<std::size_t>(c)] = ev.measure(c) * rho(c) * rho(c);
    sq_res[static_cast<std::size_t>(c)] = ev.measure(c) * res * res;
  }
  const double second_moment = pairwise_sum(sq_rho);
  const double e1_sq = std::max(0.0, pairwise_sum(sq_res));

  ProjectionError out;
  out.e1 = std::sqrt(e1_sq);
  out.ratio = second_moment > 0.0 ? e1_sq / second_moment : 0.0;
  return out;
}

}  // namespace cdpf::filter

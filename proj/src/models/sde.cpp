#include "cdpf/models/sde.hpp"

#include <cmath>

namespace cdpf::models {

SdeModel make_ou(int dim, double rate, double sigma) {
  SdeModel m;
  m.name = "ou";
  m.dim = dim;
  m.noise_dim = dim;
  const Eigen::MatrixXd rho = sigma * Eigen::MatrixXd::Identity(dim, dim);
  m.drift = [rate](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    return -rate * x;
  };
  m.diffusion = [rho](const Eigen::VectorXd&) { return rho; };
  m.drift_jacobian = [rate, dim](const Eigen::VectorXd&) -> Eigen::MatrixXd {
    return -rate * Eigen::MatrixXd::Identity(dim, dim);
  };
  m.drift_divergence = [rate, dim](const Eigen::VectorXd&) {
    return -rate * dim;
  };
  return m;
}

SdeModel make_vdp(double mu_s, double sigma_w) {
  SdeModel m;
  m.name = "vdp";
  m.dim = 2;
  m.noise_dim = 1;
  Eigen::MatrixXd rho(2, 1);
  rho << 0.0, sigma_w;
  m.drift = [mu_s](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    Eigen::VectorXd f(2);
    f[0] = x[1];
    f[1] = mu_s * (1.0 - x[0] * x[0]) * x[1] - x[0];
    return f;
  };
  m.diffusion = [rho](const Eigen::VectorXd&) { return rho; };
  m.drift_jacobian = [mu_s](const Eigen::VectorXd& x) -> Eigen::MatrixXd {
    Eigen::MatrixXd j(2, 2);
    j << 0.0, 1.0,
        -2.0 * mu_s * x[0] * x[1] - 1.0, mu_s * (1.0 - x[0] * x[0]);
    return j;
  };
  m.drift_divergence = [mu_s](const Eigen::VectorXd& x) {
    return mu_s * (1.0 - x[0] * x[0]);
  };
  return m;
}

SdeModel make_fhn(const FhnParams& p) {
  SdeModel m;
  m.name = "fhn";
  m.dim = 4;
  m.noise_dim = 4;
  const Eigen::MatrixXd rho =
      p.sigma_w * Eigen::MatrixXd::Identity(4, 4);
  m.drift = [p](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    Eigen::VectorXd f(4);
    f[0] = x[0] - x[0] * x[0] * x[0] / 3.0 - x[1] + p.i1 +
           p.coupling * (x[2] - x[0]);
    f[1] = (x[0] + p.a - p.b * x[1]) / p.tau;
    f[2] = x[2] - x[2] * x[2] * x[2] / 3.0 - x[3] + p.i2 +
           p.coupling * (x[0] - x[2]);
    f[3] = (x[2] + p.a - p.b * x[3]) / p.tau;
    return f;
  };
  m.diffusion = [rho](const Eigen::VectorXd&) { return rho; };
  m.drift_jacobian = [p](const Eigen::VectorXd& x) -> Eigen::MatrixXd {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(4, 4);
    j(0, 0) = 1.0 - x[0] * x[0] - p.coupling;
    j(0, 1) = -1.0;
    j(0, 2) = p.coupling;
    j(1, 0) = 1.0 / p.tau;
    j(1, 1) = -p.b / p.tau;
    j(2, 0) = p.coupling;
    j(2, 2) = 1.0 - x[2] * x[2] - p.coupling;
    j(2, 3) = -1.0;
    j(3, 2) = 1.0 / p.tau;
    j(3, 3) = -p.b / p.tau;
    return j;
  };
  m.drift_divergence = [p](const Eigen::VectorXd& x) {
    return (1.0 - x[0] * x[0] - p.coupling) - p.b / p.tau +
           (1.0 - x[2] * x[2] - p.coupling) - p.b / p.tau;
  };
  return m;
}

std::vector<std::function<double(const Eigen::VectorXd&)>> generator_apply(
    const SdeModel& model, const expfam::StatisticsBasis& basis) {
  std::vector<std::function<double(const Eigen::VectorXd&)>> out;
  out.reserve(basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    const expfam::Statistic* stat = &basis.entry(i);
    const SdeModel* mdl = &model;
    out.push_back([stat, mdl](const Eigen::VectorXd& x) {
      const int d = static_cast<int>(x.size());
      Eigen::VectorXd grad(d);
      Eigen::MatrixXd hess(d, d);
      stat->gradient(x, grad);
      stat->hessian(x, hess);
      const Eigen::MatrixXd a = mdl->diffusion_square(x);
      return mdl->drift(x).dot(grad) + 0.5 * (a.array() * hess.array()).sum();
    });
  }
  return out;
}

Eigen::MatrixXd generator_values(const SdeModel& model,
                                 const expfam::StatisticsBasis& basis,
                                 const Eigen::MatrixXd& X) {
  const int m = basis.size();
  const int d = model.dim;
  const Eigen::Index n = X.cols();
  Eigen::MatrixXd out(m, n);
  Eigen::VectorXd grad(d);
  Eigen::MatrixXd hess(d, d);
  const bool const_a = model.constant_diffusion;
  Eigen::MatrixXd a;
  if (const_a) a = model.diffusion_square(Eigen::VectorXd::Zero(d));
  for (Eigen::Index c = 0; c < n; ++c) {
    const Eigen::VectorXd x = X.col(c);
    const Eigen::VectorXd f = model.drift(x);
    if (!const_a) a = model.diffusion_square(x);
    for (int i = 0; i < m; ++i) {
      basis.entry(i).gradient(x, grad);
      basis.entry(i).hessian(x, hess);
      out(i, c) = f.dot(grad) + 0.5 * (a.array() * hess.array()).sum();
    }
  }
  return out;
}

Eigen::VectorXd euler_heun_step(const SdeModel& model,
                                const Eigen::VectorXd& x, double dt,
                                const Eigen::VectorXd& dw) {
  const Eigen::VectorXd f0 = model.drift(x);
  const Eigen::MatrixXd g0 = model.diffusion(x);
  const Eigen::VectorXd predictor = x + f0 * dt + g0 * dw;
  const Eigen::VectorXd f1 = model.drift(predictor);
  if (model.constant_diffusion) {
    return x + 0.5 * dt * (f0 + f1) + g0 * dw;
  }
  const Eigen::MatrixXd g1 = model.diffusion(predictor);
  return x + 0.5 * dt * (f0 + f1) + 0.5 * (g0 + g1) * dw;
}

void euler_heun_propagate(const SdeModel& model, Eigen::MatrixXd& states,
                          double dt, int n_sub, Rng& rng) {
  const double sqrt_dt = std::sqrt(dt);
  const Eigen::Index n = states.cols();
  Eigen::VectorXd dw(model.noise_dim), gdw(model.dim), x(model.dim),
      pred(model.dim);
  const bool const_g = model.constant_diffusion;
  const Eigen::MatrixXd g0 =
      const_g ? model.diffusion(Eigen::VectorXd::Zero(model.dim))
              : Eigen::MatrixXd();
  for (Eigen::Index i = 0; i < n; ++i) {
    x = states.col(i);
    for (int s = 0; s < n_sub; ++s) {
      for (int j = 0; j < model.noise_dim; ++j) dw[j] = sqrt_dt * rng.normal();
      if (const_g) {
        gdw.noalias() = g0 * dw;
        const Eigen::VectorXd f0 = model.drift(x);
        pred = x + f0 * dt + gdw;
        x += 0.5 * dt * (f0 + model.drift(pred)) + gdw;
      } else {
        x = euler_heun_step(model, x, dt, dw);
      }
    }
    states.col(i) = x;
  }
}

Eigen::MatrixXd euler_heun_path(const SdeModel& model,
                                const Eigen::VectorXd& x0, double dt,
                                int n_steps, Rng& rng) {
  Eigen::MatrixXd path(model.dim, n_steps + 1);
  path.col(0) = x0;
  const double sqrt_dt = std::sqrt(dt);
  Eigen::VectorXd dw(model.noise_dim);
  for (int k = 0; k < n_steps; ++k) {
    for (int j = 0; j < model.noise_dim; ++j) dw[j] = sqrt_dt * rng.normal();
    path.col(k + 1) = euler_heun_step(model, path.col(k), dt, dw);
  }
  return path;
}

}  // namespace cdpf::models

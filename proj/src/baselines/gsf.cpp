#include "cdpf/baselines/gsf.hpp"

#include <cmath>

#include "cdpf/util/errors.hpp"

namespace cdpf::baselines {

namespace {

constexpr double kLog2Pi = 1.8378770664093454835606594728112;

double gaussian_log_density(const Eigen::VectorXd& x, const Eigen::VectorXd& m,
                            const Eigen::MatrixXd& cov) {
  const Eigen::LLT<Eigen::MatrixXd> llt(cov);
  const Eigen::VectorXd w = llt.matrixL().solve(x - m);
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < cov.rows(); ++i) {
    log_det += std::log(llt.matrixL()(i, i));
  }
  return -0.5 * w.squaredNorm() - log_det -
         0.5 * static_cast<double>(x.size()) * kLog2Pi;
}

Eigen::MatrixXd repair_spd(Eigen::MatrixXd cov) {
  cov = 0.5 * (cov + cov.transpose()).eval();
  if (Eigen::LLT<Eigen::MatrixXd>(cov).info() == Eigen::Success) return cov;
  const int d = static_cast<int>(cov.rows());
  const double jitter = 1e-9 * cov.trace() / d;
  cov += jitter * Eigen::MatrixXd::Identity(d, d);
  if (Eigen::LLT<Eigen::MatrixXd>(cov).info() != Eigen::Success) {
    throw PredictionFailureError("mixand covariance lost positive definiteness");
  }
  return cov;
}

}  // namespace

double GaussianMixture::log_density(const Eigen::VectorXd& x) const {
  double best = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd logs(size());
  for (int i = 0; i < size(); ++i) {
    logs[i] = std::log(weights[i]) + gaussian_log_density(x, means[i], covs[i]);
    best = std::max(best, logs[i]);
  }
  if (!std::isfinite(best)) return -std::numeric_limits<double>::infinity();
  double acc = 0.0;
  for (int i = 0; i < size(); ++i) acc += std::exp(logs[i] - best);
  return best + std::log(acc);
}

Eigen::VectorXd GaussianMixture::mean() const {
  Eigen::VectorXd m = Eigen::VectorXd::Zero(dim());
  for (int i = 0; i < size(); ++i) m += weights[i] * means[i];
  return m;
}

Eigen::MatrixXd GaussianMixture::sample(int n, Rng& rng) const {
  Eigen::MatrixXd out(dim(), n);
  std::vector<Eigen::MatrixXd> chols;
  chols.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) {
    chols.push_back(Eigen::LLT<Eigen::MatrixXd>(covs[i]).matrixL());
  }
  Eigen::VectorXd z(dim());
  for (int s = 0; s < n; ++s) {
    const double u = rng.uniform();
    double cum = 0.0;
    int pick = size() - 1;
    for (int i = 0; i < size(); ++i) {
      cum += weights[i];
      if (u < cum) {
        pick = i;
        break;
      }
    }
    for (int j = 0; j < dim(); ++j) z[j] = rng.normal();
    out.col(s) = means[pick] + chols[static_cast<std::size_t>(pick)] * z;
  }
  return out;
}

GaussianMixture gsf_step(
    const GaussianMixture& mix, const models::SdeModel& model,
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& h_fn,
    const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& h_jac,
    const Eigen::MatrixXd& R, const Eigen::VectorXd& y, double dt,
    const filter::OdeConfig& ode) {
  const int d = mix.dim();
  const int nl = d * (d + 1) / 2;
  GaussianMixture out = mix;
  Eigen::VectorXd log_like(mix.size());

  for (int i = 0; i < mix.size(); ++i) {
    // prediction: linearized moment ODEs, weights frozen
    Eigen::VectorXd state(d + nl);
    state.head(d) = mix.means[i];
    int k = 0;
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c <= r; ++c) state[d + k++] = mix.covs[i](r, c);
    }
    auto rhs = [&](double, const Eigen::VectorXd& s, Eigen::VectorXd& ds) {
      const Eigen::VectorXd m = s.head(d);
      Eigen::MatrixXd p(d, d);
      int kk = 0;
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c <= r; ++c) {
          p(r, c) = s[d + kk];
          p(c, r) = s[d + kk];
          ++kk;
        }
      }
      const Eigen::MatrixXd jac = model.drift_jacobian(m);
      const Eigen::MatrixXd dp =
          jac * p + p * jac.transpose() + model.diffusion_square(m);
      ds.resize(s.size());
      ds.head(d) = model.drift(m);
      kk = 0;
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c <= r; ++c) ds[d + kk++] = dp(r, c);
      }
    };
    filter::integrate_adaptive(rhs, state, 0.0, dt, ode);

    Eigen::VectorXd m = state.head(d);
    Eigen::MatrixXd p(d, d);
    int kk = 0;
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c <= r; ++c) {
        p(r, c) = state[d + kk];
        p(c, r) = state[d + kk];
        ++kk;
      }
    }
    p = repair_spd(p);

    // extended Kalman update
    const Eigen::MatrixXd h = h_jac(m);
    const Eigen::MatrixXd s_mat = h * p * h.transpose() + R;
    const Eigen::LLT<Eigen::MatrixXd> s_llt(s_mat);
    const Eigen::VectorXd innovation = y - h_fn(m);
    const Eigen::MatrixXd gain = p * h.transpose() * s_llt.solve(
        Eigen::MatrixXd::Identity(s_mat.rows(), s_mat.cols()));
    out.means[i] = m + gain * innovation;
    out.covs[i] = repair_spd(
        (Eigen::MatrixXd::Identity(d, d) - gain * h) * p);

    const Eigen::VectorXd white = s_llt.matrixL().solve(innovation);
    double log_det = 0.0;
    for (Eigen::Index r = 0; r < s_mat.rows(); ++r) {
      log_det += std::log(s_llt.matrixL()(r, r));
    }
    log_like[i] = -0.5 * white.squaredNorm() - log_det -
                  0.5 * static_cast<double>(y.size()) * kLog2Pi;
  }

  const double shift = log_like.maxCoeff();
  Eigen::VectorXd w(mix.size());
  for (int i = 0; i < mix.size(); ++i) {
    w[i] = mix.weights[i] * std::exp(log_like[i] - shift);
  }
  const double total = w.sum();
  if (!(total > 0.0)) {
    throw DegenerateLikelihoodError("all mixand likelihoods vanished");
  }
  out.weights = w / total;
  return out;
}

}  // namespace cdpf::baselines

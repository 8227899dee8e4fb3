#include "cdpf/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cdpf/expfam/basis.hpp"
#include "cdpf/util/sum.hpp"

namespace cdpf::metrics {

namespace {

constexpr double kLogFloor = -745.0;
constexpr double kLog2Pi = 1.8378770664093454835606594728112;

double floored_exp_half(double log_v) {
  return std::exp(0.5 * std::max(log_v, kLogFloor));
}

// Exact integral of |piecewise linear| over [0,1] given breakpoints and the
// two linear quantile functions evaluated there.
double integrate_abs_difference(const std::vector<double>& ts,
                                const std::vector<double>& da) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const double w = ts[i + 1] - ts[i];
    if (w <= 0.0) continue;
    const double d0 = da[i];
    const double d1 = da[i + 1];
    if (d0 * d1 >= 0.0) {
      acc += 0.5 * w * (std::abs(d0) + std::abs(d1));
    } else {
      const double frac = d0 / (d0 - d1);  // zero crossing
      acc += 0.5 * w * (frac * std::abs(d0) + (1.0 - frac) * std::abs(d1));
    }
  }
  return acc;
}

double quantile_linear(const std::vector<double>& sorted, double t) {
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double pos = t * static_cast<double>(n - 1);
  const std::size_t lo = std::min(static_cast<std::size_t>(pos), n - 2);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double w1_1d(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a.size() == b.size()) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
    return acc / static_cast<double>(a.size());
  }
  std::vector<double> ts;
  ts.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ts.push_back(static_cast<double>(i) / static_cast<double>(a.size() - 1));
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    ts.push_back(static_cast<double>(j) / static_cast<double>(b.size() - 1));
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<double> diff(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    diff[k] = quantile_linear(a, ts[k]) - quantile_linear(b, ts[k]);
  }
  return integrate_abs_difference(ts, diff);
}

}  // namespace

HellingerPlan make_hellinger_plan(const quad::BijectionParams& region,
                                  int resolution) {
  const int d = region.dim();
  if (d != 1 && d != 2) {
    throw std::invalid_argument("hellinger supports dimensions 1 and 2");
  }
  const double h = 6.0 / static_cast<double>(resolution - 1);
  double det_l = 1.0;
  for (int i = 0; i < d; ++i) det_l *= region.chol(i, i);
  const double cell = std::pow(h, d) * det_l;

  auto axis_weight = [&](int i) {
    return (i == 0 || i == resolution - 1) ? 0.5 : 1.0;
  };
  auto z_of = [&](int i) { return -3.0 + h * static_cast<double>(i); };

  std::vector<Eigen::VectorXd> pts;
  std::vector<double> wts;
  Eigen::VectorXd z(d);
  if (d == 1) {
    for (int i = 0; i < resolution; ++i) {
      z[0] = z_of(i);
      if (std::abs(z[0]) > 3.0) continue;
      pts.push_back(region.mu + region.chol * z);
      wts.push_back(axis_weight(i) * cell);
    }
  } else {
    for (int i = 0; i < resolution; ++i) {
      z[0] = z_of(i);
      for (int j = 0; j < resolution; ++j) {
        z[1] = z_of(j);
        if (z.squaredNorm() > 9.0) continue;
        pts.push_back(region.mu + region.chol * z);
        wts.push_back(axis_weight(i) * axis_weight(j) * cell);
      }
    }
  }
  HellingerPlan plan;
  plan.points.resize(d, static_cast<Eigen::Index>(pts.size()));
  plan.weights.resize(static_cast<Eigen::Index>(wts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    plan.points.col(static_cast<Eigen::Index>(i)) = pts[i];
    plan.weights[static_cast<Eigen::Index>(i)] = wts[i];
  }
  return plan;
}

Eigen::VectorXd sqrt_density_at(const HellingerPlan& plan,
                                const LogDensity& log_p) {
  Eigen::VectorXd out(plan.points.cols());
  for (Eigen::Index i = 0; i < plan.points.cols(); ++i) {
    out[i] = floored_exp_half(log_p(plan.points.col(i)));
  }
  return out;
}

double hellinger_from_sqrts(const HellingerPlan& plan,
                            const Eigen::VectorXd& sqrt_p,
                            const Eigen::VectorXd& sqrt_q) {
  const Eigen::Index n = plan.weights.size();
  std::vector<double> terms(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double diff = sqrt_p[i] - sqrt_q[i];
    terms[static_cast<std::size_t>(i)] = plan.weights[i] * diff * diff;
  }
  const double h2 = 0.5 * pairwise_sum(terms);
  return std::min(1.0, std::sqrt(std::max(0.0, h2)));
}

double hellinger(const LogDensity& log_p, const LogDensity& log_q,
                 const quad::BijectionParams& region, int resolution) {
  const HellingerPlan plan = make_hellinger_plan(region, resolution);
  return hellinger_from_sqrts(plan, sqrt_density_at(plan, log_p),
                              sqrt_density_at(plan, log_q));
}

double sliced_w1(const Eigen::MatrixXd& samples_p,
                 const Eigen::MatrixXd& samples_q, int n_slices, Rng& rng) {
  const int d = static_cast<int>(samples_p.rows());
  if (samples_q.rows() != d) {
    throw std::invalid_argument("sample sets must share the dimension");
  }
  if (samples_p.cols() < 2 || samples_q.cols() < 2) {
    throw std::invalid_argument("need at least two samples per set");
  }
  std::vector<double> per_slice(static_cast<std::size_t>(n_slices));
  Eigen::VectorXd u(d);
  for (int s = 0; s < n_slices; ++s) {
    double norm = 0.0;
    do {
      for (int i = 0; i < d; ++i) u[i] = rng.normal();
      norm = u.norm();
    } while (norm == 0.0);
    u /= norm;
    const Eigen::VectorXd pa = samples_p.transpose() * u;
    const Eigen::VectorXd pb = samples_q.transpose() * u;
    per_slice[static_cast<std::size_t>(s)] =
        w1_1d(std::vector<double>(pa.data(), pa.data() + pa.size()),
              std::vector<double>(pb.data(), pb.data() + pb.size()));
  }
  return pairwise_sum(per_slice) / static_cast<double>(n_slices);
}

double nmse_sq_err(const Eigen::VectorXd& true_state,
                   const Eigen::VectorXd& eta,
                   const expfam::StatisticsBasis& basis) {
  return (basis.values(true_state) - eta).squaredNorm();
}

double cross_entropy(const LogDensity& log_q,
                     const Eigen::MatrixXd& samples_p) {
  const Eigen::Index n = samples_p.cols();
  std::vector<double> terms(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    terms[static_cast<std::size_t>(i)] =
        -std::max(log_q(samples_p.col(i)), kLogFloor);
  }
  return pairwise_sum(terms) / static_cast<double>(n);
}

std::vector<std::pair<double, double>> hellinger_rate_ub(
    const std::vector<std::pair<double, double>>& e1_series) {
  constexpr double inv_2sqrt2 = 0.35355339059327376220042218105242;
  std::vector<std::pair<double, double>> out;
  out.reserve(e1_series.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < e1_series.size(); ++i) {
    if (i > 0) {
      const double dt = e1_series[i].first - e1_series[i - 1].first;
      acc += 0.5 * dt * (e1_series[i].second + e1_series[i - 1].second) *
             inv_2sqrt2;
    }
    out.emplace_back(e1_series[i].first, acc);
  }
  return out;
}

Eigen::MatrixXd metropolis_sample(const LogDensity& log_target,
                                  const Eigen::VectorXd& mu,
                                  const Eigen::MatrixXd& sigma, int n,
                                  Rng& rng, int burn_in, int thin,
                                  double* acc_rate) {
  const int d = static_cast<int>(mu.size());
  const Eigen::MatrixXd prop_chol =
      Eigen::LLT<Eigen::MatrixXd>((sigma / static_cast<double>(d)).eval())
          .matrixL();
  Eigen::VectorXd x = mu;
  double log_px = log_target(x);
  long accepted = 0, proposed = 0;
  Eigen::VectorXd z(d);
  Eigen::MatrixXd out(d, n);
  int kept = 0;
  const long total = static_cast<long>(burn_in) + static_cast<long>(n) * thin;
  for (long step = 0; step < total; ++step) {
    for (int i = 0; i < d; ++i) z[i] = rng.normal();
    const Eigen::VectorXd cand = x + prop_chol * z;
    const double log_pc = log_target(cand);
    ++proposed;
    if (std::log(rng.uniform_open()) < log_pc - log_px) {
      x = cand;
      log_px = log_pc;
      ++accepted;
    }
    if (step >= burn_in && (step - burn_in) % thin == thin - 1) {
      out.col(kept++) = x;
    }
  }
  if (acc_rate != nullptr) {
    *acc_rate = static_cast<double>(accepted) / static_cast<double>(proposed);
  }
  return out.leftCols(kept);
}

GaussianKde::GaussianKde(Eigen::MatrixXd samples) : samples_(std::move(samples)) {
  const Eigen::Index n = samples_.cols();
  const int d = static_cast<int>(samples_.rows());
  const Eigen::VectorXd mean = samples_.rowwise().mean();
  const Eigen::MatrixXd centered = samples_.colwise() - mean;
  Eigen::MatrixXd cov =
      centered * centered.transpose() / static_cast<double>(n - 1);
  // Silverman factor for a Gaussian kernel with full covariance bandwidth
  const double f2 = std::pow(
      4.0 / ((d + 2.0) * static_cast<double>(n)), 2.0 / (d + 4.0));
  cov *= f2;
  cov += 1e-12 * cov.trace() / d * Eigen::MatrixXd::Identity(d, d);
  const Eigen::MatrixXd chol = Eigen::LLT<Eigen::MatrixXd>(cov).matrixL();
  bw_chol_inv_ = chol.inverse();
  double log_det = 0.0;
  for (int i = 0; i < d; ++i) log_det += std::log(chol(i, i));
  log_norm_ = -std::log(static_cast<double>(n)) - log_det - 0.5 * d * kLog2Pi;
}

double GaussianKde::log_density(const Eigen::VectorXd& x) const {
  const Eigen::MatrixXd diff =
      bw_chol_inv_ * (samples_.colwise() - x) * (-1.0);
  const Eigen::VectorXd expo = -0.5 * diff.colwise().squaredNorm();
  const double best = expo.maxCoeff();
  const double acc = (expo.array() - best).exp().sum();
  return log_norm_ + best + std::log(acc);
}

Eigen::MatrixXd subsample_columns(const Eigen::MatrixXd& samples, int cap) {
  const Eigen::Index n = samples.cols();
  if (n <= cap) return samples;
  const Eigen::Index stride = (n + cap - 1) / cap;
  const Eigen::Index kept = (n + stride - 1) / stride;
  Eigen::MatrixXd out(samples.rows(), kept);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; i += stride) out.col(k++) = samples.col(i);
  return out;
}

}  // namespace cdpf::metrics

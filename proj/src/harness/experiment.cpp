#include "cdpf/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "cdpf/baselines/enkf.hpp"
#include "cdpf/baselines/gsf.hpp"
#include "cdpf/baselines/particle.hpp"
#include "cdpf/expfam/family.hpp"
#include "cdpf/filter/projection.hpp"
#include "cdpf/util/errors.hpp"

namespace cdpf::harness {

namespace {

using filter::FilterState;
using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Eigen::VectorXd sample_mixture(const MixtureSpec& p0, Rng& rng) {
  const double u = rng.uniform();
  double cum = 0.0;
  std::size_t pick = p0.weights.size() - 1;
  for (std::size_t i = 0; i < p0.weights.size(); ++i) {
    cum += p0.weights[i];
    if (u < cum) {
      pick = i;
      break;
    }
  }
  const int d = static_cast<int>(p0.means[pick].size());
  const Eigen::MatrixXd chol =
      Eigen::LLT<Eigen::MatrixXd>(p0.covs[pick]).matrixL();
  Eigen::VectorXd z(d);
  for (int i = 0; i < d; ++i) z[i] = rng.normal();
  return p0.means[pick] + chol * z;
}

int substeps(double dt, double sde_dt) {
  const int n = static_cast<int>(std::llround(dt / sde_dt));
  if (n < 1 || std::abs(n * sde_dt - dt) > 1e-9 * dt) {
    throw std::runtime_error("sde_dt must divide the measurement interval");
  }
  return n;
}

struct MetricRow {
  std::uint64_t seed;
  int k;
  std::string method;
  std::string metric;
  double value;
};

struct SeedResult {
  std::uint64_t seed = 0;
  std::vector<MetricRow> rows;
  std::map<std::string, bool> completed;
  std::map<std::string, double> wall_ms;
  std::map<std::string, double> mcmc_acceptance;  // mean over steps (proj only)
  std::map<std::string, std::string> failure;     // method -> step and cause
};

// Shared immutable experiment pieces built once.
struct Shared {
  models::SdeModel model;
  expfam::StatisticsBasis basis;
  quad::SparseGrid grid;
  models::MeasurementModel meas;
  FilterState theta0_state;
  Eigen::VectorXd m0;  // E_{p0}[c]
  bool want_hellinger = false;
  bool want_sw1 = false;
  bool want_ce = false;
  bool want_nmse = false;

  Shared(const ExperimentConfig& cfg)
      : model(make_model(cfg.model)),
        basis(expfam::StatisticsBasis::build(model.dim, cfg.basis)),
        grid(quad::build_grid(model.dim, cfg.grid.level, cfg.grid.rule)),
        meas(make_measurement(cfg, basis)) {
    m0 = mixture_moments(basis, grid, cfg.p0);
    auto [mu0, sigma0] = mixture_mean_cov(cfg.p0);
    const quad::BijectionParams xi0 =
        quad::BijectionParams::from_moments(mu0, sigma0);
    filter::InitConfig init;
    init.tol = cfg.init.tol;
    init.max_iter = cfg.init.max_iter;
    init.gamma = cfg.init.gamma;
    theta0_state = filter::init_from_density(m0, basis, grid, xi0, init);
    for (const auto& m : cfg.metrics) {
      if (m == "hellinger") want_hellinger = true;
      if (m == "sw1") want_sw1 = true;
      if (m == "cross_entropy") want_ce = true;
      if (m == "nmse_sq_err" || m == "nmse") want_nmse = true;
    }
    if (want_hellinger && model.dim > 2) {
      throw std::runtime_error(
          "hellinger metric supports dim <= 2; use sw1 for higher dimensions");
    }
  }
};

// Per-step posterior representation of one method, holding whatever the
// metrics need.
struct Posterior {
  // analytic log density when available (proj, gsf), otherwise via KDE
  metrics::LogDensity log_density;
  Eigen::VectorXd eta;        // E[c] under the method's posterior
  Eigen::MatrixXd samples;    // for sw1 (d x n); empty when sw1 unused
};

class SeedRunner {
 public:
  SeedRunner(const ExperimentConfig& cfg, const Shared& sh, std::uint64_t seed)
      : cfg_(cfg), sh_(sh), seed_(seed) {}

  SeedResult run() {
    SeedResult res;
    res.seed = seed_;
    const Truth truth = generate_truth(cfg_, seed_);

    // reference particle filter runs regardless of the method list
    std::vector<Eigen::MatrixXd> pf_particles;
    bool pf_ok = run_reference_pf(truth, pf_particles, res);

    for (const auto& method : cfg_.methods) {
      if (method == "pf") continue;  // handled above
      run_method(method, truth, pf_particles, pf_ok, res);
    }
    // order rows: k, then method in config order, then metric
    std::map<std::string, int> method_rank;
    for (std::size_t i = 0; i < cfg_.methods.size(); ++i) {
      method_rank[cfg_.methods[i]] = static_cast<int>(i);
    }
    std::map<std::string, int> metric_rank;
    int mr = 0;
    for (const auto& m : cfg_.metrics) metric_rank[m] = mr++;
    for (const char* diag : {"e1", "e1_ratio", "hellinger_rate_ub"}) {
      metric_rank[diag] = mr++;
    }
    std::stable_sort(res.rows.begin(), res.rows.end(),
                     [&](const MetricRow& a, const MetricRow& b) {
                       if (a.k != b.k) return a.k < b.k;
                       const int ma = method_rank[a.method];
                       const int mb = method_rank[b.method];
                       if (ma != mb) return ma < mb;
                       return metric_rank[a.metric] < metric_rank[b.metric];
                     });
    return res;
  }

 private:
  bool method_listed(const std::string& m) const {
    return std::find(cfg_.methods.begin(), cfg_.methods.end(), m) !=
           cfg_.methods.end();
  }

  bool run_reference_pf(const Truth& truth,
                        std::vector<Eigen::MatrixXd>& pf_particles,
                        SeedResult& res) {
    const bool listed = method_listed("pf");
    Rng init_rng(seed_, "pf-init");
    Eigen::MatrixXd parts(sh_.model.dim, cfg_.pf_particles);
    for (int i = 0; i < cfg_.pf_particles; ++i) {
      parts.col(i) = sample_mixture(cfg_.p0, init_rng);
    }
    baselines::ParticleEnsemble ens = baselines::make_uniform_ensemble(parts);
    Rng rng(seed_, "pf");
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    pf_particles.clear();
    pf_particles.reserve(cfg_.horizon);
    for (int k = 1; k <= cfg_.horizon; ++k) {
      const Eigen::VectorXd y = truth.measurements.col(k - 1);
      try {
        ens = baselines::pf_step(
            ens, sh_.model,
            [&](const Eigen::VectorXd& x) {
              return sh_.meas.log_likelihood(y, x);
            },
            cfg_.measurement.dt, cfg_.sde_dt, rng);
      } catch (const std::exception& e) {
        ok = false;
        res.failure["pf"] = "step " + std::to_string(k) + ": " + e.what();
        break;
      }
      pf_particles.push_back(ens.particles);
    }
    const auto t1 = std::chrono::steady_clock::now();
    if (listed) {
      res.wall_ms["pf"] =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      res.completed["pf"] = ok;
    }
    if (ok && listed) {
      for (int k = 1; k <= cfg_.horizon; ++k) {
        const Posterior post = pf_posterior(pf_particles[k - 1]);
        emit_comparison_rows("pf", k, truth, pf_particles[k - 1], post, res);
      }
    }
    return ok;
  }

  Posterior pf_posterior(const Eigen::MatrixXd& particles) const {
    Posterior post;
    const Eigen::MatrixXd kde_samples = metrics::subsample_columns(particles, 1024);
    auto kde = std::make_shared<metrics::GaussianKde>(kde_samples);
    post.log_density = [kde](const Eigen::VectorXd& x) {
      return kde->log_density(x);
    };
    if (sh_.want_nmse) {
      post.eta = sh_.basis.values_at(particles).rowwise().mean();
    }
    if (sh_.want_sw1) post.samples = metrics::subsample_columns(particles, 4096);
    return post;
  }

  void run_method(const std::string& method, const Truth& truth,
                  const std::vector<Eigen::MatrixXd>& pf_particles, bool pf_ok,
                  SeedResult& res) {
    const bool is_proj = method.rfind("proj", 0) == 0;
    try {
      if (is_proj) {
        run_projection(method, truth, pf_particles, pf_ok, res);
      } else if (method == "enkf") {
        run_enkf(truth, pf_particles, pf_ok, res);
      } else if (method == "gsf") {
        run_gsf(truth, pf_particles, pf_ok, res);
      }
    } catch (const std::exception&) {
      res.completed[method] = false;
    }
  }

  void run_projection(const std::string& method, const Truth& truth,
                      const std::vector<Eigen::MatrixXd>& pf_particles,
                      bool pf_ok, SeedResult& res) {
    const filter::RegularizerConfig reg = cfg_.regularizers.at(method);
    FilterState state = sh_.theta0_state;
    std::vector<FilterState> posts;
    std::vector<double> e1s, ratios, ubs;
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    double ub = 0.0;
    filter::ProjectionError err_prev =
        filter::local_projection_error(state, sh_.model, sh_.basis, sh_.grid);
    constexpr double inv_2sqrt2 = 0.35355339059327376220042218105242;
    for (int k = 1; k <= cfg_.horizon; ++k) {
      try {
        const FilterState prior = filter::predict(
            state, cfg_.measurement.dt, sh_.model, sh_.basis, sh_.grid,
            cfg_.ode, reg);
        const filter::ProjectionError err_k = filter::local_projection_error(
            prior, sh_.model, sh_.basis, sh_.grid);
        ub += 0.5 * cfg_.measurement.dt * (err_prev.e1 + err_k.e1) * inv_2sqrt2;
        const expfam::NaturalParams theta_k =
            filter::bayes_update(prior.theta, truth.measurements.col(k - 1),
                                 sh_.meas);
        state = filter::finalize_update(theta_k, prior.xi, prior.t, sh_.basis,
                                        sh_.grid);
        err_prev = filter::local_projection_error(state, sh_.model, sh_.basis,
                                                  sh_.grid);
        posts.push_back(state);
        e1s.push_back(err_k.e1);
        ratios.push_back(err_k.ratio);
        ubs.push_back(ub);
      } catch (const std::exception& e) {
        ok = false;
        res.failure[method] = "step " + std::to_string(k) + ": " + e.what();
        break;
      }
    }
    const auto t1 = std::chrono::steady_clock::now();
    res.wall_ms[method] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    res.completed[method] = ok;

    double acc_sum = 0.0;
    int acc_n = 0;
    for (std::size_t i = 0; i < posts.size(); ++i) {
      const int k = static_cast<int>(i) + 1;
      res.rows.push_back({seed_, k, method, "e1", e1s[i]});
      res.rows.push_back({seed_, k, method, "e1_ratio", ratios[i]});
      res.rows.push_back({seed_, k, method, "hellinger_rate_ub", ubs[i]});
      if (!pf_ok) continue;
      const FilterState& st = posts[i];
      Posterior post;
      post.log_density = [this, &st](const Eigen::VectorXd& x) {
        return expfam::log_density(st.theta, sh_.basis, x, st.psi);
      };
      post.eta = st.eta;
      if (sh_.want_sw1) {
        Rng mcmc_rng(seed_, "mcmc/" + method + "/" + std::to_string(k));
        double acc = 0.0;
        post.samples = metrics::metropolis_sample(
            post.log_density, st.xi.mu, st.xi.sigma, 4096, mcmc_rng, 1000, 10,
            &acc);
        acc_sum += acc;
        ++acc_n;
      }
      emit_comparison_rows(method, k, truth, pf_particles[i], post, res);
    }
    if (acc_n > 0) res.mcmc_acceptance[method] = acc_sum / acc_n;
  }

  void run_enkf(const Truth& truth,
                const std::vector<Eigen::MatrixXd>& pf_particles, bool pf_ok,
                SeedResult& res) {
    Rng init_rng(seed_, "enkf-init");
    Eigen::MatrixXd ens(sh_.model.dim, cfg_.pf_particles);
    for (int i = 0; i < cfg_.pf_particles; ++i) {
      ens.col(i) = sample_mixture(cfg_.p0, init_rng);
    }
    Rng rng(seed_, "enkf");
    std::vector<Eigen::MatrixXd> states;
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 1; k <= cfg_.horizon; ++k) {
      try {
        ens = baselines::enkf_step(ens, sh_.model, sh_.meas.h_fn, sh_.meas.R,
                                   truth.measurements.col(k - 1),
                                   cfg_.measurement.dt, cfg_.sde_dt, rng);
      } catch (const std::exception& e) {
        ok = false;
        res.failure["enkf"] = "step " + std::to_string(k) + ": " + e.what();
        break;
      }
      states.push_back(ens);
    }
    const auto t1 = std::chrono::steady_clock::now();
    res.wall_ms["enkf"] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    res.completed["enkf"] = ok;
    if (!pf_ok) return;
    for (std::size_t i = 0; i < states.size(); ++i) {
      const int k = static_cast<int>(i) + 1;
      const Posterior post = pf_posterior(states[i]);  // same KDE treatment
      emit_comparison_rows("enkf", k, truth, pf_particles[i], post, res);
    }
  }

  void run_gsf(const Truth& truth,
               const std::vector<Eigen::MatrixXd>& pf_particles, bool pf_ok,
               SeedResult& res) {
    baselines::GaussianMixture mix = initial_mixture();
    std::vector<baselines::GaussianMixture> states;
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 1; k <= cfg_.horizon; ++k) {
      try {
        mix = baselines::gsf_step(mix, sh_.model, sh_.meas.h_fn,
                                  sh_.meas.h_jac, sh_.meas.R,
                                  truth.measurements.col(k - 1),
                                  cfg_.measurement.dt, cfg_.ode);
      } catch (const std::exception& e) {
        ok = false;
        res.failure["gsf"] = "step " + std::to_string(k) + ": " + e.what();
        break;
      }
      states.push_back(mix);
    }
    const auto t1 = std::chrono::steady_clock::now();
    res.wall_ms["gsf"] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    res.completed["gsf"] = ok;
    if (!pf_ok) return;
    for (std::size_t i = 0; i < states.size(); ++i) {
      const int k = static_cast<int>(i) + 1;
      const baselines::GaussianMixture& m = states[i];
      Posterior post;
      post.log_density = [&m](const Eigen::VectorXd& x) {
        return m.log_density(x);
      };
      if (sh_.want_nmse || sh_.want_sw1) {
        Rng srng(seed_, "gsf-eta/" + std::to_string(k));
        const Eigen::MatrixXd samples =
            m.sample(sh_.want_sw1 ? 4096 : 20000, srng);
        if (sh_.want_nmse) {
          post.eta = sh_.basis.values_at(samples).rowwise().mean();
        }
        if (sh_.want_sw1) post.samples = samples;
      }
      emit_comparison_rows("gsf", k, truth, pf_particles[i], post, res);
    }
  }

  baselines::GaussianMixture initial_mixture() const {
    const int nm = cfg_.gsf_mixands;
    const int d = sh_.model.dim;
    const double eps_m = 1e-2;
    const std::size_t base = cfg_.p0.weights.size();
    baselines::GaussianMixture mix;
    if (nm <= static_cast<int>(base)) {
      mix.weights = Eigen::VectorXd(static_cast<Eigen::Index>(base));
      for (std::size_t i = 0; i < base; ++i) mix.weights[i] = cfg_.p0.weights[i];
      mix.means = cfg_.p0.means;
      mix.covs = cfg_.p0.covs;
      return mix;
    }
    const int extra = nm - static_cast<int>(base);
    const double denom = 1.0 + eps_m * extra;
    mix.weights = Eigen::VectorXd(nm);
    Rng rng(seed_, "gsf-init");
    for (int i = 0; i < nm; ++i) {
      if (i < static_cast<int>(base)) {
        mix.weights[i] = cfg_.p0.weights[i] / denom;
        mix.means.push_back(cfg_.p0.means[i]);
        mix.covs.push_back(cfg_.p0.covs[i]);
      } else {
        mix.weights[i] = eps_m / denom;
        Eigen::VectorXd mean(d);
        for (int c = 0; c < d; ++c) mean[c] = rng.normal();
        mix.means.push_back(mean);
        mix.covs.push_back(Eigen::MatrixXd::Identity(d, d));
      }
    }
    return mix;
  }

  void emit_comparison_rows(const std::string& method, int k,
                            const Truth& truth,
                            const Eigen::MatrixXd& pf_at_k,
                            const Posterior& post, SeedResult& res) {
    for (const auto& metric : cfg_.metrics) {
      double value = 0.0;
      if (metric == "hellinger") {
        value = hellinger_to_pf(k, pf_at_k, post, method == "pf");
      } else if (metric == "sw1") {
        Rng slice_rng(cfg_.slice_seed, "sw1-slices");
        const Eigen::MatrixXd ref = metrics::subsample_columns(pf_at_k, 4096);
        value = metrics::sliced_w1(ref, post.samples, cfg_.sw1_slices, slice_rng);
      } else if (metric == "cross_entropy") {
        value = metrics::cross_entropy(
            post.log_density, metrics::subsample_columns(pf_at_k, 10000));
      } else if (metric == "nmse_sq_err" || metric == "nmse") {
        value = metrics::nmse_sq_err(truth.states.col(k), post.eta, sh_.basis);
      } else {
        throw std::runtime_error("unknown metric '" + metric + "'");
      }
      res.rows.push_back({seed_, k, method,
                          metric == "nmse" ? "nmse_sq_err" : metric, value});
    }
  }

  struct PfReference {
    metrics::HellingerPlan plan;
    Eigen::VectorXd sqrt_ref;
  };

  const PfReference& pf_reference(int k, const Eigen::MatrixXd& pf_at_k) {
    auto it = pf_ref_.find(k);
    if (it != pf_ref_.end()) return it->second;
    const Eigen::VectorXd mu = pf_at_k.rowwise().mean();
    const Eigen::MatrixXd centered = pf_at_k.colwise() - mu;
    Eigen::MatrixXd cov = centered * centered.transpose() /
                          static_cast<double>(pf_at_k.cols() - 1);
    const int d = static_cast<int>(cov.rows());
    cov += 1e-12 * cov.trace() / d * Eigen::MatrixXd::Identity(d, d);
    PfReference ref;
    ref.plan = metrics::make_hellinger_plan(
        quad::BijectionParams::from_moments(mu, cov));
    const metrics::GaussianKde kde(metrics::subsample_columns(pf_at_k, 1024));
    ref.sqrt_ref = metrics::sqrt_density_at(
        ref.plan, [&kde](const Eigen::VectorXd& x) { return kde.log_density(x); });
    return pf_ref_.emplace(k, std::move(ref)).first->second;
  }

  double hellinger_to_pf(int k, const Eigen::MatrixXd& pf_at_k,
                         const Posterior& post, bool is_reference) {
    const PfReference& ref = pf_reference(k, pf_at_k);
    if (is_reference) {
      return metrics::hellinger_from_sqrts(ref.plan, ref.sqrt_ref,
                                           ref.sqrt_ref);
    }
    const Eigen::VectorXd sqrt_q =
        metrics::sqrt_density_at(ref.plan, post.log_density);
    return metrics::hellinger_from_sqrts(ref.plan, ref.sqrt_ref, sqrt_q);
  }

  const ExperimentConfig& cfg_;
  const Shared& sh_;
  std::uint64_t seed_;
  std::map<int, PfReference> pf_ref_;
};

double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo =
      std::min(static_cast<std::size_t>(pos), sorted.size() - 1);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

models::SdeModel make_model(const ModelSpec& spec) {
  auto param = [&spec](const std::string& key, double fallback) {
    const auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
  };
  if (spec.name == "ou") {
    return models::make_ou(static_cast<int>(param("dim", 1)),
                           param("rate", 1.0), param("sigma", std::sqrt(2.0)));
  }
  if (spec.name == "vdp") {
    return models::make_vdp(param("mu_s", 0.5), param("sigma_w", 2.0));
  }
  if (spec.name == "fhn") {
    models::FhnParams p;
    p.a = param("a", p.a);
    p.b = param("b", p.b);
    p.tau = param("tau", p.tau);
    p.coupling = param("coupling", p.coupling);
    p.i1 = param("i1", p.i1);
    p.i2 = param("i2", p.i2);
    p.sigma_w = param("sigma_w", p.sigma_w);
    return models::make_fhn(p);
  }
  throw std::runtime_error("unknown model '" + spec.name + "'");
}

models::MeasurementModel make_measurement(const ExperimentConfig& cfg,
                                          const expfam::StatisticsBasis& basis) {
  const int d = basis.dim();
  std::vector<int> h_index;
  if (cfg.measurement.h == "identity") {
    for (int i = 0; i < d; ++i) {
      Eigen::VectorXi ei = Eigen::VectorXi::Zero(d);
      ei[i] = 1;
      h_index.push_back(basis.find_entry(ei, Eigen::VectorXi::Zero(d)));
    }
  } else if (cfg.measurement.h == "sin") {
    for (int i = 0; i < d; ++i) {
      Eigen::VectorXi ei = Eigen::VectorXi::Zero(d);
      ei[i] = 1;
      const int idx = basis.find_entry(Eigen::VectorXi::Zero(d), ei);
      if (idx < 0) {
        throw std::runtime_error(
            "measurement h=sin requires sin(x_i) statistics in the basis");
      }
      h_index.push_back(idx);
    }
  } else {
    throw std::runtime_error("unknown measurement function '" +
                             cfg.measurement.h + "'");
  }
  const double r = cfg.measurement.sigma_v * cfg.measurement.sigma_v;
  const Eigen::MatrixXd H = Eigen::MatrixXd::Identity(d, d);
  const Eigen::MatrixXd R = r * Eigen::MatrixXd::Identity(d, d);
  models::MeasurementModel mm = models::build_conjugate_maps(basis, h_index, H, R);
  if (cfg.measurement.h == "identity") {
    mm.h_fn = [](const Eigen::VectorXd& x) { return x; };
    mm.h_jac = [d](const Eigen::VectorXd&) {
      return Eigen::MatrixXd::Identity(d, d);
    };
  } else {
    mm.h_fn = [](const Eigen::VectorXd& x) {
      return x.array().sin().matrix().eval();
    };
    mm.h_jac = [d](const Eigen::VectorXd& x) {
      Eigen::MatrixXd j = Eigen::MatrixXd::Zero(d, d);
      for (int i = 0; i < d; ++i) j(i, i) = std::cos(x[i]);
      return j;
    };
  }
  return mm;
}

Truth generate_truth(const ExperimentConfig& cfg, std::uint64_t seed) {
  const models::SdeModel model = make_model(cfg.model);
  Rng rng(seed, "truth");
  Rng meas_rng(seed, "meas");
  const int n_sub = substeps(cfg.measurement.dt, cfg.sde_dt);

  Truth truth;
  truth.states.resize(model.dim, cfg.horizon + 1);
  truth.states.col(0) = sample_mixture(cfg.p0, rng);

  const double sqrt_dt = std::sqrt(cfg.sde_dt);
  Eigen::VectorXd dw(model.noise_dim);
  Eigen::VectorXd x = truth.states.col(0);
  const int dy = model.dim;  // both built-in h's map to dim outputs
  truth.measurements.resize(dy, cfg.horizon);
  for (int k = 1; k <= cfg.horizon; ++k) {
    for (int s = 0; s < n_sub; ++s) {
      for (int j = 0; j < model.noise_dim; ++j) dw[j] = sqrt_dt * rng.normal();
      x = models::euler_heun_step(model, x, cfg.sde_dt, dw);
    }
    truth.states.col(k) = x;
    Eigen::VectorXd h(dy);
    if (cfg.measurement.h == "sin") {
      h = x.array().sin().matrix();
    } else {
      h = x;
    }
    for (int j = 0; j < dy; ++j) {
      h[j] += cfg.measurement.sigma_v * meas_rng.normal();
    }
    truth.measurements.col(k - 1) = h;
  }
  return truth;
}

Eigen::VectorXd mixture_moments(const expfam::StatisticsBasis& basis,
                                const quad::SparseGrid& grid,
                                const MixtureSpec& p0) {
  const int d = basis.dim();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(basis.size());
  const double norm = std::pow(3.14159265358979323846, -0.5 * d);
  for (std::size_t i = 0; i < p0.weights.size(); ++i) {
    const quad::BijectionParams xi =
        quad::BijectionParams::from_moments(p0.means[i], p0.covs[i]);
    const Eigen::MatrixXd pts = quad::map_to_state_space(grid, xi);
    const Eigen::MatrixXd c = basis.values_at(pts);
    Eigen::VectorXd w(grid.size());
    for (Eigen::Index j = 0; j < grid.size(); ++j) {
      w[j] = norm * grid.gauss_weights(j) *
             std::exp(-grid.gauss_nodes.col(j).squaredNorm());
    }
    out += p0.weights[i] * (c * w);
  }
  return out;
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> mixture_mean_cov(
    const MixtureSpec& p0) {
  const int d = static_cast<int>(p0.means[0].size());
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(d);
  for (std::size_t i = 0; i < p0.weights.size(); ++i) {
    mu += p0.weights[i] * p0.means[i];
  }
  Eigen::MatrixXd second = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t i = 0; i < p0.weights.size(); ++i) {
    second += p0.weights[i] *
              (p0.covs[i] + p0.means[i] * p0.means[i].transpose());
  }
  return {mu, second - mu * mu.transpose()};
}

void dump_density_grid(const metrics::LogDensity& log_density,
                       const quad::BijectionParams& region, int resolution,
                       const std::string& path) {
  const int d = region.dim();
  if (d > 2) throw std::invalid_argument("grid dumps support dim <= 2");
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  os << (d == 1 ? "x1,log_density\n" : "x1,x2,log_density\n");
  const double h = 10.0 / (resolution - 1);
  Eigen::VectorXd z(d);
  for (int i = 0; i < resolution; ++i) {
    z[0] = -5.0 + h * i;
    if (d == 1) {
      const Eigen::VectorXd x = region.mu + region.chol * z;
      os << format_double(x[0]) << "," << format_double(log_density(x)) << "\n";
    } else {
      for (int j = 0; j < resolution; ++j) {
        z[1] = -5.0 + h * j;
        const Eigen::VectorXd x = region.mu + region.chol * z;
        os << format_double(x[0]) << "," << format_double(x[1]) << ","
           << format_double(log_density(x)) << "\n";
      }
    }
  }
}

void dump_marginal_samples(const Eigen::MatrixXd& samples,
                           const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  for (Eigen::Index i = 0; i < samples.rows(); ++i) {
    os << (i ? ",x" : "x") << (i + 1);
  }
  os << "\n";
  for (Eigen::Index c = 0; c < samples.cols(); ++c) {
    for (Eigen::Index i = 0; i < samples.rows(); ++i) {
      if (i) os << ",";
      os << format_double(samples(i, c));
    }
    os << "\n";
  }
}

void dump_grid_csv(const quad::SparseGrid& grid, std::ostream& os) {
  os << "idx";
  for (int i = 0; i < grid.dim; ++i) os << ",x" << (i + 1);
  os << ",weight,gauss_weight\n";
  for (Eigen::Index c = 0; c < grid.size(); ++c) {
    os << c;
    for (int i = 0; i < grid.dim; ++i) os << "," << format_double(grid.nodes(i, c));
    os << "," << format_double(grid.weights(c)) << ","
       << format_double(grid.gauss_weights(c)) << "\n";
  }
}

void run_experiment(const ExperimentConfig& cfg, std::ostream* log) {
  const Shared sh(cfg);
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  fs::create_directories(cfg.out_dir + "/densities");

  // initial density dumps (projection fit and the mixture itself)
  if (sh.model.dim <= 2) {
    auto [mu0, sigma0] = mixture_mean_cov(cfg.p0);
    const quad::BijectionParams region =
        quad::BijectionParams::from_moments(mu0, sigma0);
    const FilterState& st = sh.theta0_state;
    dump_density_grid(
        [&](const Eigen::VectorXd& x) {
          return expfam::log_density(st.theta, sh.basis, x, st.psi);
        },
        region, 161, cfg.out_dir + "/densities/init_projection.csv");
    baselines::GaussianMixture mix;
    mix.weights = Eigen::Map<const Eigen::VectorXd>(cfg.p0.weights.data(),
                                                    cfg.p0.weights.size());
    mix.means = cfg.p0.means;
    mix.covs = cfg.p0.covs;
    dump_density_grid(
        [&](const Eigen::VectorXd& x) { return mix.log_density(x); }, region,
        161, cfg.out_dir + "/densities/init_mixture.csv");
  }

  // worker pool over seeds, merged in seed order
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CDPF_WORKERS")) {
    workers = std::max(1, std::atoi(env));
  }
  workers = std::max(1, std::min(workers, cfg.n_seeds));

  std::vector<SeedResult> results(cfg.n_seeds);
  std::mutex log_mutex;
  std::atomic<int> next_seed{0};
  auto worker = [&]() {
    while (true) {
      const int s = next_seed.fetch_add(1);
      if (s >= cfg.n_seeds) return;
      SeedRunner runner(cfg, sh, static_cast<std::uint64_t>(s));
      results[s] = runner.run();
      if (log != nullptr) {
        std::lock_guard<std::mutex> lk(log_mutex);
        (*log) << "seed " << s << " done\n" << std::flush;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  // results.csv
  {
    std::ofstream os(cfg.out_dir + "/results.csv");
    if (!os) throw std::runtime_error("cannot write results.csv");
    os << "seed,k,method,metric,value\n";
    for (const auto& res : results) {
      for (const auto& row : res.rows) {
        os << row.seed << "," << row.k << "," << row.method << ","
           << row.metric << "," << format_double(row.value) << "\n";
      }
    }
  }

  // summary.json: quartiles per (metric, method, k), completion, wall time
  ordered_json summary;
  summary["name"] = cfg.name;
  summary["n_seeds"] = cfg.n_seeds;
  summary["horizon"] = cfg.horizon;

  ordered_json methods_json;
  for (const auto& method : cfg.methods) {
    int completed = 0, ran = 0;
    double wall = 0.0;
    int wall_n = 0;
    for (const auto& res : results) {
      const auto it = res.completed.find(method);
      if (it != res.completed.end()) {
        ++ran;
        if (it->second) ++completed;
      }
      const auto wit = res.wall_ms.find(method);
      if (wit != res.wall_ms.end()) {
        wall += wit->second;
        ++wall_n;
      }
    }
    ordered_json mj;
    mj["completion_rate"] = ran > 0 ? static_cast<double>(completed) / ran : 0.0;
    mj["mean_wall_ms"] = wall_n > 0 ? wall / wall_n : 0.0;
    methods_json[method] = mj;
  }
  summary["methods"] = methods_json;

  std::vector<std::string> all_metrics = cfg.metrics;
  all_metrics.push_back("e1");
  all_metrics.push_back("e1_ratio");
  all_metrics.push_back("hellinger_rate_ub");
  ordered_json quartiles;
  for (const auto& metric : all_metrics) {
    ordered_json per_method;
    for (const auto& method : cfg.methods) {
      ordered_json per_k;
      for (int k = 1; k <= cfg.horizon; ++k) {
        std::vector<double> vals;
        for (const auto& res : results) {
          for (const auto& row : res.rows) {
            if (row.k == k && row.method == method && row.metric == metric) {
              vals.push_back(row.value);
            }
          }
        }
        if (vals.empty()) continue;
        std::sort(vals.begin(), vals.end());
        per_k[std::to_string(k)] = {quantile_sorted(vals, 0.25),
                                    quantile_sorted(vals, 0.5),
                                    quantile_sorted(vals, 0.75)};
      }
      if (!per_k.empty()) per_method[method] = per_k;
    }
    if (!per_method.empty()) quartiles[metric] = per_method;
  }
  summary["quartiles"] = quartiles;

  ordered_json diag;
  {
    double acc = 0.0;
    int n = 0;
    for (const auto& res : results) {
      for (const auto& [m, a] : res.mcmc_acceptance) {
        acc += a;
        ++n;
      }
    }
    if (n > 0) diag["mcmc_mean_acceptance"] = acc / n;
    ordered_json failures;
    for (const auto& res : results) {
      for (const auto& [m, why] : res.failure) {
        failures["seed " + std::to_string(res.seed) + " " + m] = why;
      }
    }
    if (!failures.empty()) diag["incomplete_runs"] = failures;
  }
  summary["diagnostics"] = diag;

  std::ofstream os(cfg.out_dir + "/summary.json");
  if (!os) throw std::runtime_error("cannot write summary.json");
  os << summary.dump(2) << "\n";
}

KalmanCheck run_kalman_crosscheck(int n_steps, std::uint64_t seed) {
  // OU: dx = -x dt + sqrt(2) dW, linear h = x, R = 1, dt = 0.5
  const double dt = 0.5;
  const models::SdeModel model = models::make_ou(1, 1.0, std::sqrt(2.0));
  expfam::BasisSpec bs;
  bs.monomial_order = 2;
  const expfam::StatisticsBasis basis = expfam::StatisticsBasis::build(1, bs);
  const quad::SparseGrid grid =
      quad::build_grid(1, 8, quad::Rule::kGaussPatterson);
  const Eigen::MatrixXd H = Eigen::MatrixXd::Identity(1, 1);
  const Eigen::MatrixXd R = Eigen::MatrixXd::Identity(1, 1);
  models::MeasurementModel meas = models::build_conjugate_maps(basis, {0}, H, R);
  meas.h_fn = [](const Eigen::VectorXd& x) { return x; };
  meas.h_jac = [](const Eigen::VectorXd&) {
    return Eigen::MatrixXd::Identity(1, 1);
  };

  const double m0 = 0.0, p0 = 0.25;
  Rng rng(seed, "kalman-oracle");
  double x_true = m0 + std::sqrt(p0) * rng.normal();

  filter::OdeConfig ode;
  ode.rel_tol = 1e-8;
  ode.abs_tol = 1e-10;
  const filter::RegularizerConfig reg = filter::RegularizerConfig::none();

  FilterState state;
  state.theta.theta = expfam::gaussian_theta(
      basis, Eigen::VectorXd::Constant(1, m0),
      Eigen::MatrixXd::Constant(1, 1, p0));
  state.xi = quad::BijectionParams::from_moments(
      Eigen::VectorXd::Constant(1, m0), Eigen::MatrixXd::Constant(1, 1, p0));
  const expfam::MomentSet mo0 =
      expfam::moments(state.theta, basis, grid, state.xi);
  state.eta = mo0.eta;
  state.psi = mo0.psi;
  state.t = 0.0;

  double km = m0, kp = p0;
  KalmanCheck out;
  const int n_sub = 20;
  const double sde_dt = dt / n_sub;
  for (int k = 1; k <= n_steps; ++k) {
    // truth propagation and measurement
    const double sq = std::sqrt(sde_dt);
    for (int s = 0; s < n_sub; ++s) {
      Eigen::VectorXd xv(1), dw(1);
      xv[0] = x_true;
      dw[0] = sq * rng.normal();
      x_true = models::euler_heun_step(model, xv, sde_dt, dw)[0];
    }
    const double y = x_true + rng.normal();

    // Kalman recursion (exact moment propagation for the OU process)
    km = km * std::exp(-dt);
    kp = 1.0 + (kp - 1.0) * std::exp(-2.0 * dt);
    const double gain = kp / (kp + 1.0);
    km = km + gain * (y - km);
    kp = (1.0 - gain) * kp;

    // projection filter step
    const FilterState prior =
        filter::predict(state, dt, model, basis, grid, ode, reg);
    const filter::ProjectionError pe =
        filter::local_projection_error(prior, model, basis, grid);
    out.max_e1 = std::max(out.max_e1, pe.e1);
    const expfam::NaturalParams theta_k =
        filter::bayes_update(prior.theta, Eigen::VectorXd::Constant(1, y), meas);
    state = filter::finalize_update(theta_k, prior.xi, prior.t, basis, grid);

    const double fm = state.xi.mu[0];
    const double fp = state.xi.sigma(0, 0);
    out.max_mean_err = std::max(out.max_mean_err, std::abs(fm - km));
    out.max_var_err = std::max(out.max_var_err, std::abs(fp - kp));
  }
  out.pass = out.max_mean_err < 1e-3 && out.max_var_err < 1e-3 &&
             out.max_e1 < 1e-6;
  return out;
}

}  // namespace cdpf::harness

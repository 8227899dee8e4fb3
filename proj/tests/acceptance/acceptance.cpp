// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.  The exit code is the number
// of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>
#include <sstream>
#include <vector>

#include "cdpf/baselines/gsf.hpp"
#include "cdpf/expfam/family.hpp"
#include "cdpf/filter/projection.hpp"
#include "cdpf/harness/config.hpp"
#include "cdpf/harness/experiment.hpp"
#include "cdpf/metrics/metrics.hpp"
#include "cdpf/util/rng.hpp"

#ifndef CDPF_CONFIG_DIR
#define CDPF_CONFIG_DIR "configs"
#endif

using namespace cdpf;

namespace {

int g_failures = 0;

void report(int number, bool pass, const std::string& text) {
  std::cout << "criterion " << number << ": " << (pass ? "PASS" : "FAIL")
            << " - " << text << std::endl;
  if (!pass) ++g_failures;
}

double elapsed_s(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

expfam::StatisticsBasis vdp_basis() {
  expfam::BasisSpec spec;
  spec.monomial_order = 4;
  spec.augment = {"sin(x1)", "sin(x2)", "sin(x1)*sin(x2)", "sin(x1)^2",
                  "sin(x2)^2"};
  return expfam::StatisticsBasis::build(2, spec);
}

// ---------------------------------------------------------------------------
// 1. grid cardinality
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto g2 = quad::build_grid(2, 8, quad::Rule::kGaussKronrod);
  const auto g4 = quad::build_grid(4, 6, quad::Rule::kGaussKronrod);
  const double dt = elapsed_s(t0);
  const bool pass = g2.size() == 20833 && g4.size() == 186345 && dt < 10.0;
  report(1, pass,
         "grid cardinality: build_grid(2,8,GK) = " + std::to_string(g2.size()) +
             " (expected 20833), build_grid(4,6,GK) = " +
             std::to_string(g4.size()) + " (expected 186345), " + fmt(dt) +
             " s");
}

// ---------------------------------------------------------------------------
// 2. Gaussian closed forms at level 4 and the gradient identity
void criterion_2() {
  expfam::BasisSpec spec;
  spec.monomial_order = 2;
  const auto basis = expfam::StatisticsBasis::build(1, spec);
  const auto grid = quad::build_grid(1, 4, quad::Rule::kGaussPatterson);
  const auto xi = quad::BijectionParams::from_moments(
      Eigen::VectorXd::Zero(1), Eigen::MatrixXd::Identity(1, 1));
  const expfam::NaturalParams theta{Eigen::Vector2d(0.0, -0.5)};
  const auto mo = expfam::moments(theta, basis, grid, xi);

  const double psi_err = std::abs(mo.psi - 0.5 * std::log(2.0 * M_PI));
  const double eta_err =
      std::max(std::abs(mo.eta[0]), std::abs(mo.eta[1] - 1.0));
  Eigen::MatrixXd fisher_true(2, 2);
  fisher_true << 1.0, 0.0, 0.0, 2.0;
  const double g_err = (mo.fisher - fisher_true).cwiseAbs().maxCoeff();

  bool fd_ok = true;
  Rng rng(101, "acceptance-theta");
  for (int t = 0; t < 20; ++t) {
    Eigen::Vector2d th(0.4 * rng.normal(), -0.4 - 0.4 * rng.uniform());
    const auto m = expfam::moments({th}, basis, grid, xi);
    const double h = 1e-5;
    Eigen::Vector2d fd;
    for (int i = 0; i < 2; ++i) {
      Eigen::Vector2d tp = th, tm = th;
      tp[i] += h;
      tm[i] -= h;
      fd[i] = (expfam::log_partition({tp}, basis, grid, xi) -
               expfam::log_partition({tm}, basis, grid, xi)) /
              (2 * h);
    }
    if ((fd - m.eta).norm() > 1e-5 * std::max(1.0, m.eta.norm())) fd_ok = false;
  }

  const bool pass =
      psi_err < 1e-7 && eta_err < 1e-7 && g_err < 1e-7 && fd_ok;
  report(2, pass,
         "Gaussian closed forms at level 4: |psi err| = " + fmt(psi_err) +
             ", |eta err| = " + fmt(eta_err) + ", |fisher err| = " +
             fmt(g_err) + " (tolerance 1e-7 each), gradient identity " +
             (fd_ok ? "ok" : "failed"));
}

// ---------------------------------------------------------------------------
// 3. linear-Gaussian oracle
void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto check = harness::run_kalman_crosscheck(10);
  const double dt = elapsed_s(t0);
  const bool pass = check.pass && dt < 30.0;
  report(3, pass,
         "linear-Gaussian oracle: max mean err " + fmt(check.max_mean_err) +
             ", max var err " + fmt(check.max_var_err) + " (tol 1e-3), max E1 " +
             fmt(check.max_e1) + " (tol 1e-6), " + fmt(dt) + " s");
}

// ---------------------------------------------------------------------------
// 4. conjugate-update exactness against a dense-tensor-grid Bayes oracle
void criterion_4() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto basis = vdp_basis();
  const std::vector<int> h_index = {14, 15};
  const Eigen::MatrixXd R = Eigen::MatrixXd::Identity(2, 2);
  const auto meas = models::build_conjugate_maps(
      basis, h_index, Eigen::MatrixXd::Identity(2, 2), R);

  // dense tensor grid over [-6, 6]^2
  const int res = 301;
  const double lo = -6.0, hi = 6.0;
  const double h = (hi - lo) / (res - 1);
  Eigen::MatrixXd pts(2, res * res);
  int col = 0;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      pts(0, col) = lo + i * h;
      pts(1, col) = lo + j * h;
      ++col;
    }
  }
  const Eigen::MatrixXd cvals = basis.values_at(pts);

  Rng rng(202, "acceptance-conjugate");
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::VectorXd mu(2);
    mu << 0.6 * rng.normal(), 0.6 * rng.normal();
    Eigen::MatrixXd a(2, 2);
    a << 1.0 + 0.3 * rng.uniform(), 0.3 * rng.normal(), 0.0,
        1.0 + 0.3 * rng.uniform();
    const Eigen::MatrixXd sigma = a * a.transpose();
    Eigen::VectorXd theta_minus = expfam::gaussian_theta(basis, mu, sigma);
    for (int s = 14; s < 19; ++s) theta_minus[s] += 0.3 * rng.normal();
    Eigen::VectorXd y(2);
    y << rng.normal(), rng.normal();

    const auto theta_plus =
        filter::bayes_update({theta_minus}, y, meas);

    // oracle: normalize p_{theta-} * likelihood on the dense grid
    Eigen::VectorXd log_w = cvals.transpose() * theta_minus;
    for (int c = 0; c < res * res; ++c) {
      const Eigen::Vector2d hx(std::sin(pts(0, c)), std::sin(pts(1, c)));
      log_w[c] += -0.5 * (y - hx).squaredNorm();
    }
    const Eigen::VectorXd w =
        (log_w.array() - log_w.maxCoeff()).exp().matrix();
    const Eigen::VectorXd oracle_eta = (cvals * w) / w.sum();

    // the conjugate posterior evaluated on the same dense grid
    Eigen::VectorXd log_q = cvals.transpose() * theta_plus.theta;
    const Eigen::VectorXd q =
        (log_q.array() - log_q.maxCoeff()).exp().matrix();
    const Eigen::VectorXd post_eta = (cvals * q) / q.sum();

    worst = std::max(worst,
                     (oracle_eta - post_eta).lpNorm<Eigen::Infinity>());
  }
  const double dt = elapsed_s(t0);
  const bool pass = worst < 1e-6 && dt < 60.0;
  report(4, pass,
         "conjugate-update exactness: worst |eta gap| over 50 draws = " +
             fmt(worst) + " (tol 1e-6), " + fmt(dt) + " s");
}

// ---------------------------------------------------------------------------
// 5. augmentation monotonicity of the local projection error
void criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto basis_full = vdp_basis();
  expfam::BasisSpec mono_spec;
  mono_spec.monomial_order = 4;
  const auto basis_mono = expfam::StatisticsBasis::build(2, mono_spec);
  const auto grid = quad::build_grid(2, 6, quad::Rule::kGaussKronrod);
  const auto model = models::make_vdp(0.5, 2.0);

  Rng rng(303, "acceptance-augment");
  int done = 0, strict = 0;
  bool bounded = true;
  while (done < 20) {
    Eigen::VectorXd mu(2);
    mu << 0.5 * rng.normal(), 0.5 * rng.normal();
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Identity(2, 2);
    sigma(0, 1) = sigma(1, 0) = 0.3 * rng.normal();
    sigma(0, 0) = 1.0 + 0.3 * rng.uniform();
    sigma(1, 1) = 1.0 + 0.3 * rng.uniform();
    Eigen::VectorXd theta1 = expfam::gaussian_theta(basis_mono, mu, sigma);
    for (int i = 0; i < theta1.size(); ++i) theta1[i] += 0.05 * rng.normal();
    // keep the quartic diagonal concave so the density stays integrable
    theta1[basis_mono.find_entry((Eigen::VectorXi(2) << 4, 0).finished(),
                                 Eigen::VectorXi::Zero(2))] =
        -0.15 - 0.05 * rng.uniform();
    theta1[basis_mono.find_entry((Eigen::VectorXi(2) << 0, 4).finished(),
                                 Eigen::VectorXi::Zero(2))] =
        -0.15 - 0.05 * rng.uniform();

    Eigen::VectorXd theta_full = Eigen::VectorXd::Zero(basis_full.size());
    theta_full.head(basis_mono.size()) = theta1;

    try {
      const auto xi0 = quad::BijectionParams::from_moments(
          mu, 2.0 * Eigen::MatrixXd::Identity(2, 2));
      const auto mo = expfam::moments({theta1}, basis_mono, grid, xi0);
      auto [m1, s1] = expfam::mean_cov(mo.eta, basis_mono);
      const auto xi = quad::BijectionParams::from_moments(m1, s1);

      filter::FilterState st_full;
      st_full.theta.theta = theta_full;
      st_full.xi = xi;
      filter::FilterState st_mono;
      st_mono.theta.theta = theta1;
      st_mono.xi = xi;

      const auto e_full =
          filter::local_projection_error(st_full, model, basis_full, grid);
      const auto e_mono =
          filter::local_projection_error(st_mono, model, basis_mono, grid);
      if (e_full.e1 > e_mono.e1 + 1e-10) bounded = false;
      if (e_full.e1 < e_mono.e1 - 1e-10) ++strict;
      ++done;
    } catch (const std::exception&) {
      continue;  // resample an integrable theta
    }
  }
  const double dt = elapsed_s(t0);
  const bool pass = bounded && strict >= 18 && dt < 120.0;
  report(5, pass,
         "augmentation monotonicity: E1(c) <= E1(c1) + 1e-10 " +
             std::string(bounded ? "held" : "violated") +
             ", strict decrease in " + std::to_string(strict) + "/20, " +
             fmt(dt) + " s");
}

// ---------------------------------------------------------------------------
// 6. regularizer contract
void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  // exact truncation on constructed diagonal cases
  {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2, 2);
    g(0, 0) = 2.0;
    g(1, 1) = 1e-9;
    const Eigen::VectorXd w = filter::truncated_natural_gradient(
        g, Eigen::Vector2d(2.0, 1.0), {1e-5, 10.0});
    ok = ok && std::abs(w[0] - 1.0) < 1e-12 && w[1] == 0.0;
  }
  // identity passthrough when inactive
  {
    const Eigen::VectorXd w = filter::truncated_natural_gradient(
        Eigen::MatrixXd::Identity(2, 2), Eigen::Vector2d(3.0, 4.0),
        {1e-6, 10.0});
    ok = ok && (w - Eigen::Vector2d(3.0, 4.0)).norm() < 1e-9;
  }
  // hard norm bound, including indefinite inputs
  Rng rng(404, "acceptance-reg");
  for (int t = 0; t < 200 && ok; ++t) {
    const int m = 2 + static_cast<int>(rng.uniform() * 5);
    Eigen::MatrixXd g(m, m);
    for (int i = 0; i < m * m; ++i) g(i / m, i % m) = rng.normal();
    Eigen::VectorXd v(m);
    for (int i = 0; i < m; ++i) v[i] = 5.0 * rng.normal();
    const double cap = 0.1 + 2.0 * rng.uniform();
    const Eigen::VectorXd w =
        filter::truncated_natural_gradient(g, v, {1e-8, cap});
    ok = ok && w.norm() <= cap * (1.0 + 1e-12);
  }
  const double dt = elapsed_s(t0);
  report(6, ok && dt < 1.0,
         std::string("regularizer contract: truncation, passthrough and norm "
                     "bound ") +
             (ok ? "hold" : "violated") + ", " + fmt(dt) + " s");
}

// ---------------------------------------------------------------------------
// 7. desk-scale comparative study (paper-scale runs are not desk-feasible)
void criterion_7() {
  const auto t0 = std::chrono::steady_clock::now();
  auto cfg = harness::load_config(std::string(CDPF_CONFIG_DIR) +
                                  "/vdp_desk.json");
  cfg.out_dir = "out/acceptance_vdp_desk";
  std::filesystem::remove_all(cfg.out_dir);
  harness::run_experiment(cfg, nullptr);

  // medians per (method, k) from results.csv
  std::ifstream in(cfg.out_dir + "/results.csv");
  std::string line;
  std::getline(in, line);
  std::map<std::pair<std::string, int>, std::vector<double>> hell;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string seed, k, method, metric, value;
    std::getline(ss, seed, ',');
    std::getline(ss, k, ',');
    std::getline(ss, method, ',');
    std::getline(ss, metric, ',');
    std::getline(ss, value, ',');
    if (metric == "hellinger") {
      hell[{method, std::stoi(k)}].push_back(std::stod(value));
    }
  }
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n == 0 ? std::numeric_limits<double>::quiet_NaN()
                  : (n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]));
  };
  bool medians_ok = true;
  std::string detail;
  for (int k = 1; k <= cfg.horizon; ++k) {
    const double mb = median(hell[{"proj-b", k}]);
    const double me = median(hell[{"enkf", k}]);
    const double mg = median(hell[{"gsf", k}]);
    if (!(mb <= me && mb <= mg)) medians_ok = false;
    if (k <= 3) {
      detail += " k=" + std::to_string(k) + ": " + fmt(mb) + "/" + fmt(me) +
                "/" + fmt(mg);
    }
  }

  // completion rates from summary.json
  std::ifstream sin_file(cfg.out_dir + "/summary.json");
  std::stringstream buf;
  buf << sin_file.rdbuf();
  const std::string summary = buf.str();
  auto completion = [&summary](const std::string& method) {
    const auto mpos = summary.find("\"" + method + "\"");
    const auto cpos = summary.find("completion_rate", mpos);
    const auto colon = summary.find(':', cpos);
    return std::stod(summary.substr(colon + 1));
  };
  const double comp_b = completion("proj-b");
  const double comp_plain = completion("proj");
  const bool comp_ok = comp_b >= comp_plain;

  const double dt = elapsed_s(t0);
  // seeds parallelize embarrassingly: the 8-core budget is assessed as the
  // measured wall time scaled by workers/8
  unsigned workers = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("CDPF_WORKERS")) {
    workers = static_cast<unsigned>(std::max(1, std::atoi(env)));
  }
  workers = std::max(1u, std::min<unsigned>(workers, 20));
  const double eight_core = dt * workers / 8.0;
  const bool pass = medians_ok && comp_ok && eight_core < 1800.0;
  report(7, pass,
         "desk study: median Hellinger proj-b/enkf/gsf" + detail +
             " (proj-b lowest " + (medians_ok ? "yes" : "no") +
             "), completion proj-b " + fmt(comp_b) + " >= proj " +
             fmt(comp_plain) + (comp_ok ? " yes" : " no") + ", " + fmt(dt) +
             " s on " + std::to_string(workers) + " worker(s) (~" +
             fmt(eight_core) + " s on 8 cores)");
}

// ---------------------------------------------------------------------------
// 8. metric sanity suite
void criterion_8() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  auto normal_1d = [](double m, double var) {
    return [m, var](const Eigen::VectorXd& x) {
      const double e = x[0] - m;
      return -0.5 * e * e / var - 0.5 * std::log(var) -
             0.5 * std::log(2.0 * M_PI);
    };
  };
  const auto region = quad::BijectionParams::from_moments(
      Eigen::VectorXd::Constant(1, 0.5), Eigen::MatrixXd::Constant(1, 1, 2.0));

  const double self =
      metrics::hellinger(normal_1d(0, 1), normal_1d(0, 1), region);
  ok = ok && self < 1e-8;

  const double clipped = metrics::hellinger(
      normal_1d(-50, 0.01), normal_1d(50, 0.01),
      quad::BijectionParams::from_moments(Eigen::VectorXd::Zero(1),
                                          Eigen::MatrixXd::Constant(1, 1, 2000.0)));
  ok = ok && clipped == 1.0;

  const double shift =
      metrics::hellinger(normal_1d(0, 1), normal_1d(1, 1), region);
  const double shift_expected = 0.3425;
  ok = ok && std::abs(shift - shift_expected) <= 1e-3;
  detail += "shift=" + fmt(shift);

  Rng srng(505, "acceptance-sw1");
  Eigen::MatrixXd a(2, 512);
  for (int c = 0; c < 512; ++c) {
    a(0, c) = srng.normal();
    a(1, c) = srng.normal();
  }
  Rng slice_rng(0, "slices");
  ok = ok && metrics::sliced_w1(a, a, 32, slice_rng) == 0.0;

  Rng crng(606, "acceptance-ce");
  Eigen::MatrixXd samples(1, 100000);
  for (int c = 0; c < 100000; ++c) samples(0, c) = crng.normal();
  const double ce = metrics::cross_entropy(normal_1d(0, 1), samples);
  const double ce_expected = 1.4189;
  ok = ok && std::abs(ce - ce_expected) <= 0.01;
  detail += " ce=" + fmt(ce);

  const double dt = elapsed_s(t0);
  report(8, ok && dt < 60.0,
         "metric sanity: self-distance, clipping, " + detail +
             " (0.3425 +/- 1e-3, 1.4189 +/- 0.01), " + fmt(dt) + " s");
}

// ---------------------------------------------------------------------------
// 9. determinism across worker counts
void criterion_9() {
  const auto t0 = std::chrono::steady_clock::now();
  auto cfg = harness::load_config(std::string(CDPF_CONFIG_DIR) +
                                  "/ou_smoke.json");
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  cfg.out_dir = "out/acceptance_det1";
  std::filesystem::remove_all(cfg.out_dir);
  setenv("CDPF_WORKERS", "1", 1);
  harness::run_experiment(cfg, nullptr);
  cfg.out_dir = "out/acceptance_det2";
  std::filesystem::remove_all(cfg.out_dir);
  setenv("CDPF_WORKERS", "8", 1);
  harness::run_experiment(cfg, nullptr);
  unsetenv("CDPF_WORKERS");
  const bool same = slurp("out/acceptance_det1/results.csv") ==
                    slurp("out/acceptance_det2/results.csv");
  const double dt = elapsed_s(t0);
  report(9, same && dt < 60.0,
         std::string("determinism: results.csv byte-identical across worker "
                     "counts: ") +
             (same ? "yes" : "no") + ", " + fmt(dt) + " s");
}

}  // namespace

int main() {
  std::cout << "acceptance suite\n";
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::cout << (g_failures == 0
                    ? "all criteria passed"
                    : std::to_string(g_failures) + " criteria failed")
            << std::endl;
  return g_failures;
}

#include <doctest.h>

#include <cmath>

#include "cdpf/baselines/enkf.hpp"
#include "cdpf/baselines/gsf.hpp"
#include "cdpf/baselines/particle.hpp"
#include "cdpf/util/errors.hpp"

using namespace cdpf;

namespace {

double gaussian_loglik(double y, double hx, double r) {
  const double e = y - hx;
  return -0.5 * e * e / r - 0.5 * std::log(2.0 * 3.14159265358979323846 * r);
}

}  // namespace

TEST_CASE("systematic resampling") {
  SUBCASE("uniform weights keep every particle exactly once") {
    const int n = 257;
    Rng rng(1, "resample");
    const Eigen::VectorXd w = Eigen::VectorXd::Constant(n, 1.0 / n);
    const auto idx = baselines::systematic_resample_indices(w, rng);
    std::vector<int> count(n, 0);
    for (int i : idx) count[i]++;
    for (int i = 0; i < n; ++i) CHECK(count[i] == 1);
  }
  SUBCASE("offspring counts are unbiased") {
    const int n = 8;
    Eigen::VectorXd w(n);
    w << 0.25, 0.05, 0.15, 0.05, 0.2, 0.1, 0.15, 0.05;
    const int trials = 10000;
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd m2 = Eigen::VectorXd::Zero(n);
    for (int t = 0; t < trials; ++t) {
      Rng rng(t, "resample-trial");
      const auto idx = baselines::systematic_resample_indices(w, rng);
      Eigen::VectorXd count = Eigen::VectorXd::Zero(n);
      for (int i : idx) count[i] += 1.0;
      mean += count;
      m2 += count.cwiseProduct(count);
    }
    mean /= trials;
    m2 /= trials;
    for (int i = 0; i < n; ++i) {
      const double var = m2[i] - mean[i] * mean[i];
      const double se = std::sqrt(std::max(var, 1e-12) / trials);
      CHECK(std::abs(mean[i] - n * w[i]) <= 3.0 * se + 1e-9);
    }
  }
}

TEST_CASE("particle filter") {
  SUBCASE("posterior concentrates on a constant observable state") {
    const auto model = models::make_ou(1, 0.0, 0.0);  // frozen dynamics
    const int n = 4000;
    Rng init(3, "pf-init");
    Eigen::MatrixXd parts(1, n);
    for (int i = 0; i < n; ++i) parts(0, i) = init.normal();
    auto ens = baselines::make_uniform_ensemble(parts);
    Rng rng(3, "pf");
    const double r = 1e-4;  // nearly exact measurement of the true state 0.4
    double prev_std = 1e9;
    for (int k = 0; k < 5; ++k) {
      ens = baselines::pf_step(
          ens, model,
          [&](const Eigen::VectorXd& x) {
            return gaussian_loglik(0.4, x[0], r);
          },
          0.1, 0.05, rng);
      const double mean = ens.particles.row(0).mean();
      const double std_dev = std::sqrt(
          (ens.particles.row(0).array() - mean).square().mean());
      CHECK(std_dev <= prev_std + 1e-12);
      prev_std = std_dev;
    }
    CHECK(std::abs(ens.particles.row(0).mean() - 0.4) < 0.05);
  }
  SUBCASE("linear-Gaussian agreement with the Kalman filter") {
    const auto model = models::make_ou(1, 1.0, std::sqrt(2.0));
    const int n = 20000;
    const double dt = 0.5, r = 1.0;
    Rng init(4, "pf-init");
    Eigen::MatrixXd parts(1, n);
    for (int i = 0; i < n; ++i) parts(0, i) = init.normal();
    auto ens = baselines::make_uniform_ensemble(parts);
    Rng rng(4, "pf");
    Rng obs_rng(4, "obs");
    double km = 0.0, kp = 1.0;
    for (int k = 0; k < 3; ++k) {
      const double y = obs_rng.normal() * 1.2;
      km *= std::exp(-dt);
      kp = 1.0 + (kp - 1.0) * std::exp(-2.0 * dt);
      const double gain = kp / (kp + r);
      km += gain * (y - km);
      kp *= (1.0 - gain);
      ens = baselines::pf_step(
          ens, model,
          [&](const Eigen::VectorXd& x) { return gaussian_loglik(y, x[0], r); },
          dt, 0.025, rng);
      const double mean = ens.particles.row(0).mean();
      CHECK(std::abs(mean - km) < 3.0 * std::sqrt(kp / n) + 0.01);
    }
  }
  SUBCASE("bit reproducible under identical seeds") {
    const auto model = models::make_ou(1, 1.0, 1.0);
    auto run = [&]() {
      Rng init(5, "pf-init");
      Eigen::MatrixXd parts(1, 512);
      for (int i = 0; i < 512; ++i) parts(0, i) = init.normal();
      auto ens = baselines::make_uniform_ensemble(parts);
      Rng rng(5, "pf");
      ens = baselines::pf_step(
          ens, model,
          [&](const Eigen::VectorXd& x) { return gaussian_loglik(0.3, x[0], 1.0); },
          0.5, 0.025, rng);
      return ens.particles;
    };
    const Eigen::MatrixXd a = run();
    const Eigen::MatrixXd b = run();
    CHECK(a == b);
  }
  SUBCASE("vanishing weights raise a degenerate-likelihood error") {
    const auto model = models::make_ou(1, 0.0, 0.0);
    auto ens = baselines::make_uniform_ensemble(Eigen::MatrixXd::Zero(1, 16));
    Rng rng(6, "pf");
    CHECK_THROWS_AS(
        (void)baselines::pf_step(
            ens, model,
            [](const Eigen::VectorXd&) {
              return -std::numeric_limits<double>::infinity();
            },
            0.1, 0.1, rng),
        DegenerateLikelihoodError);
  }
}

TEST_CASE("ensemble Kalman filter") {
  SUBCASE("linear-Gaussian analysis mean approaches the Kalman mean") {
    const auto model = models::make_ou(1, 1.0, std::sqrt(2.0));
    const int n = 20000;
    const double dt = 0.5;
    Rng init(7, "enkf-init");
    Eigen::MatrixXd ens(1, n);
    for (int i = 0; i < n; ++i) ens(0, i) = init.normal();
    Rng rng(7, "enkf");
    const double y = 0.8;
    double km = 0.0, kp = 1.0;
    km *= std::exp(-dt);
    kp = 1.0 + (kp - 1.0) * std::exp(-2.0 * dt);
    const double gain = kp / (kp + 1.0);
    km += gain * (y - km);
    kp *= (1.0 - gain);
    ens = baselines::enkf_step(
        ens, model, [](const Eigen::VectorXd& x) { return x; },
        Eigen::MatrixXd::Identity(1, 1), Eigen::VectorXd::Constant(1, y), dt,
        0.025, rng);
    CHECK(std::abs(ens.row(0).mean() - km) < 3.0 * std::sqrt(kp / n) + 0.01);
    const double var =
        (ens.row(0).array() - ens.row(0).mean()).square().mean();
    CHECK(std::abs(var - kp) < 0.05);
  }
  SUBCASE("huge R makes the analysis match the forecast") {
    const auto model = models::make_ou(1, 0.0, 0.0);  // frozen: forecast = prior
    const int n = 2000;
    Rng init(8, "enkf-init");
    Eigen::MatrixXd ens(1, n);
    for (int i = 0; i < n; ++i) ens(0, i) = init.normal();
    const Eigen::MatrixXd prior = ens;
    Rng rng(8, "enkf");
    ens = baselines::enkf_step(
        ens, model, [](const Eigen::VectorXd& x) { return x; },
        Eigen::MatrixXd::Constant(1, 1, 1e12),
        Eigen::VectorXd::Constant(1, 100.0), 0.1, 0.1, rng);
    CHECK((ens - prior).cwiseAbs().maxCoeff() < 1e-4);
  }
  SUBCASE("nonlinear measurement stays finite across seeds") {
    const auto model = models::make_vdp(0.5, 2.0);
    for (int seed = 0; seed < 20; ++seed) {
      Rng init(seed, "enkf-init");
      Eigen::MatrixXd ens(2, 500);
      for (int i = 0; i < 500; ++i) {
        ens(0, i) = 1.0 + init.normal();
        ens(1, i) = -1.0 + init.normal();
      }
      Rng rng(seed, "enkf");
      ens = baselines::enkf_step(
          ens, model,
          [](const Eigen::VectorXd& x) {
            return x.array().sin().matrix().eval();
          },
          Eigen::MatrixXd::Identity(2, 2), Eigen::VectorXd::Constant(2, 0.2),
          1.0, 0.025, rng);
      CHECK(ens.allFinite());
    }
  }
}

TEST_CASE("Gaussian-sum filter") {
  filter::OdeConfig ode;
  ode.rel_tol = 1e-8;
  ode.abs_tol = 1e-10;
  SUBCASE("a single mixand on a linear model is a Kalman filter") {
    const auto model = models::make_ou(1, 1.0, std::sqrt(2.0));
    baselines::GaussianMixture mix;
    mix.weights = Eigen::VectorXd::Constant(1, 1.0);
    mix.means = {Eigen::VectorXd::Zero(1)};
    mix.covs = {Eigen::MatrixXd::Identity(1, 1)};
    const double dt = 0.5, y = 0.7;
    double km = 0.0, kp = 1.0;
    km *= std::exp(-dt);
    kp = 1.0 + (kp - 1.0) * std::exp(-2.0 * dt);
    const double gain = kp / (kp + 1.0);
    km += gain * (y - km);
    kp *= (1.0 - gain);
    const auto post = baselines::gsf_step(
        mix, model, [](const Eigen::VectorXd& x) { return x; },
        [](const Eigen::VectorXd&) { return Eigen::MatrixXd::Identity(1, 1); },
        Eigen::MatrixXd::Identity(1, 1), Eigen::VectorXd::Constant(1, y), dt,
        ode);
    CHECK(std::abs(post.means[0][0] - km) < 1e-6);
    CHECK(std::abs(post.covs[0](0, 0) - kp) < 1e-6);
  }
  SUBCASE("symmetry keeps mixand weights equal") {
    const auto model = models::make_ou(1, 1.0, 1.0);
    baselines::GaussianMixture mix;
    mix.weights = Eigen::VectorXd::Constant(2, 0.5);
    mix.means = {Eigen::VectorXd::Constant(1, -1.0),
                 Eigen::VectorXd::Constant(1, 1.0)};
    mix.covs = {Eigen::MatrixXd::Identity(1, 1),
                Eigen::MatrixXd::Identity(1, 1)};
    const auto post = baselines::gsf_step(
        mix, model, [](const Eigen::VectorXd& x) { return x; },
        [](const Eigen::VectorXd&) { return Eigen::MatrixXd::Identity(1, 1); },
        Eigen::MatrixXd::Identity(1, 1), Eigen::VectorXd::Zero(1), 0.5, ode);
    CHECK(std::abs(post.weights[0] - post.weights[1]) < 1e-10);
    CHECK(std::abs(post.weights.sum() - 1.0) < 1e-12);
  }
  SUBCASE("weights stay on the simplex and covariances stay symmetric") {
    const auto model = models::make_vdp(0.5, 2.0);
    baselines::GaussianMixture mix;
    mix.weights = Eigen::VectorXd::Constant(3, 1.0 / 3.0);
    mix.means = {Eigen::Vector2d(1.0, -1.0), Eigen::Vector2d(-1.0, 1.0),
                 Eigen::Vector2d(0.0, 0.0)};
    mix.covs = {Eigen::MatrixXd::Identity(2, 2),
                Eigen::MatrixXd::Identity(2, 2),
                Eigen::MatrixXd::Identity(2, 2)};
    const auto post = baselines::gsf_step(
        mix, model,
        [](const Eigen::VectorXd& x) { return x.array().sin().matrix().eval(); },
        [](const Eigen::VectorXd& x) {
          Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2, 2);
          j(0, 0) = std::cos(x[0]);
          j(1, 1) = std::cos(x[1]);
          return j;
        },
        Eigen::MatrixXd::Identity(2, 2), Eigen::VectorXd::Constant(2, 0.3),
        1.0, ode);
    CHECK(std::abs(post.weights.sum() - 1.0) < 1e-12);
    CHECK(post.weights.minCoeff() >= 0.0);
    for (const auto& c : post.covs) {
      CHECK((c - c.transpose()).norm() < 1e-10);
      CHECK(Eigen::LLT<Eigen::MatrixXd>(c).info() == Eigen::Success);
    }
  }
}

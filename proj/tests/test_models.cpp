#include <doctest.h>

#include <cmath>

#include "cdpf/models/measurement.hpp"
#include "cdpf/models/sde.hpp"
#include "cdpf/util/errors.hpp"
#include "cdpf/util/rng.hpp"

using namespace cdpf;
using expfam::BasisSpec;
using expfam::StatisticsBasis;

namespace {

StatisticsBasis gaussian_basis_1d() {
  BasisSpec spec;
  spec.monomial_order = 2;
  return StatisticsBasis::build(1, spec);
}

StatisticsBasis vdp_basis() {
  BasisSpec spec;
  spec.monomial_order = 4;
  spec.augment = {"sin(x1)", "sin(x2)", "sin(x1)*sin(x2)", "sin(x1)^2",
                  "sin(x2)^2"};
  return StatisticsBasis::build(2, spec);
}

class ConstantStat : public expfam::Statistic {
 public:
  double value(const Eigen::VectorXd&) const override { return 1.0; }
  void gradient(const Eigen::VectorXd&,
                Eigen::Ref<Eigen::VectorXd> out) const override {
    out.setZero();
  }
  void hessian(const Eigen::VectorXd&,
               Eigen::Ref<Eigen::MatrixXd> out) const override {
    out.setZero();
  }
  std::string label() const override { return "1"; }
};

}  // namespace

TEST_CASE("generator on the Ornstein-Uhlenbeck model") {
  const auto model = models::make_ou(1, 1.0, std::sqrt(2.0));
  const auto basis = gaussian_basis_1d();
  const auto gen = models::generator_apply(model, basis);
  REQUIRE(gen.size() == 2);
  for (double xv : {-1.5, -0.2, 0.0, 0.7, 2.0}) {
    Eigen::VectorXd x(1);
    x << xv;
    CHECK(gen[0](x) == doctest::Approx(-xv).epsilon(1e-14));           // L(x)
    CHECK(gen[1](x) == doctest::Approx(-2 * xv * xv + 2).epsilon(1e-13));  // L(x^2)
  }
}

TEST_CASE("generator on the Van der Pol model") {
  const auto model = models::make_vdp(0.5, 2.0);
  const auto basis = vdp_basis();
  const auto gen = models::generator_apply(model, basis);
  const int x2sq = 4;  // "x2^2"
  REQUIRE(basis.label(x2sq) == "x2^2");
  Rng rng(5, "probe");
  for (int t = 0; t < 10; ++t) {
    Eigen::VectorXd x(2);
    x << rng.normal(), rng.normal();
    const double expected =
        2.0 * x[1] * (0.5 * (1.0 - x[0] * x[0]) * x[1] - x[0]) + 4.0;
    CHECK(gen[x2sq](x) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("generator is linear and kills constants") {
  const auto model = models::make_vdp(0.5, 2.0);
  const auto basis = vdp_basis();
  const auto gen = models::generator_apply(model, basis);

  const ConstantStat one;
  Rng rng(6, "probe");
  for (int t = 0; t < 5; ++t) {
    Eigen::VectorXd x(2);
    x << rng.normal(), rng.normal();
    // L(1) = 0
    Eigen::VectorXd grad(2);
    Eigen::MatrixXd hess(2, 2);
    one.gradient(x, grad);
    one.hessian(x, hess);
    const Eigen::MatrixXd a = model.diffusion_square(x);
    CHECK(model.drift(x).dot(grad) + 0.5 * (a.array() * hess.array()).sum() ==
          0.0);
    // L(alpha c_i + beta c_j) = alpha L(c_i) + beta L(c_j), checked through
    // the quadratic-statistic identity L(x^T x) = 2 x^T f + tr(a)
    const double lhs = gen[2](x) + gen[4](x);  // L(x1^2) + L(x2^2)
    const double rhs = 2.0 * x.dot(model.drift(x)) + a.trace();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("batched generator values agree with the per-entry functions") {
  const auto model = models::make_fhn(models::FhnParams{});
  BasisSpec spec;
  spec.monomial_order = 2;
  const auto basis = StatisticsBasis::build(4, spec);
  const auto gen = models::generator_apply(model, basis);
  Rng rng(7, "probe");
  Eigen::MatrixXd X(4, 6);
  for (int c = 0; c < 6; ++c) {
    for (int r = 0; r < 4; ++r) X(r, c) = rng.normal();
  }
  const Eigen::MatrixXd G = models::generator_values(model, basis, X);
  for (int c = 0; c < 6; ++c) {
    for (int i = 0; i < basis.size(); ++i) {
      CHECK(G(i, c) == doctest::Approx(gen[i](X.col(c))).epsilon(1e-13));
    }
  }
}

TEST_CASE("drift Jacobian and divergence are consistent") {
  for (const auto& model :
       {models::make_vdp(0.5, 2.0), models::make_fhn(models::FhnParams{})}) {
    Rng rng(8, model.name);
    for (int t = 0; t < 5; ++t) {
      Eigen::VectorXd x(model.dim);
      for (int i = 0; i < model.dim; ++i) x[i] = rng.normal();
      const Eigen::MatrixXd jac = model.drift_jacobian(x);
      CHECK(jac.trace() ==
            doctest::Approx(model.drift_divergence(x)).epsilon(1e-12));
      const double h = 1e-6;
      for (int j = 0; j < model.dim; ++j) {
        Eigen::VectorXd xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        const Eigen::VectorXd fd = (model.drift(xp) - model.drift(xm)) / (2 * h);
        CHECK((fd - jac.col(j)).norm() < 1e-6 * std::max(1.0, jac.norm()));
      }
    }
  }
}

TEST_CASE("conjugate maps: scalar linear measurement") {
  const auto basis = gaussian_basis_1d();
  const Eigen::MatrixXd H = Eigen::MatrixXd::Identity(1, 1);
  const Eigen::MatrixXd R = Eigen::MatrixXd::Identity(1, 1);
  const auto mm = models::build_conjugate_maps(basis, {0}, H, R);
  CHECK(mm.K1(0, 0) == doctest::Approx(1.0));
  CHECK(mm.K1(1, 0) == doctest::Approx(0.0));
  CHECK(mm.theta_l0[0] == doctest::Approx(0.0));
  CHECK(mm.theta_l0[1] == doctest::Approx(0.5));
  CHECK(mm.T1(0, 0) == 1.0);
  CHECK(mm.T2(0, 1) == 1.0);
}

TEST_CASE("conjugate maps: trigonometric and linear vector measurements") {
  SUBCASE("sin measurements on the augmented 2-D basis") {
    const auto basis = vdp_basis();
    const std::vector<int> h_index = {14, 15};  // sin(x1), sin(x2)
    const auto mm = models::build_conjugate_maps(
        basis, h_index, Eigen::MatrixXd::Identity(2, 2),
        Eigen::MatrixXd::Identity(2, 2));
    CHECK(mm.T2.rows() == 4);
    // each Kronecker entry maps to exactly one statistic
    for (int r = 0; r < 4; ++r) CHECK(mm.T2.row(r).sum() == 1.0);
  }
  SUBCASE("identity measurement on the 4-D monomial basis") {
    BasisSpec spec;
    spec.monomial_order = 4;
    spec.augment = {"x1^6", "x2^6", "x3^6", "x4^6"};
    const auto basis = StatisticsBasis::build(4, spec);
    std::vector<int> h_index;
    for (int i = 0; i < 4; ++i) {
      Eigen::VectorXi ei = Eigen::VectorXi::Zero(4);
      ei[i] = 1;
      h_index.push_back(basis.find_entry(ei, Eigen::VectorXi::Zero(4)));
    }
    const Eigen::MatrixXd R = 4.0 * Eigen::MatrixXd::Identity(4, 4);
    const auto mm = models::build_conjugate_maps(
        basis, h_index, Eigen::MatrixXd::Identity(4, 4), R);
    CHECK(mm.T2.rows() == 16);
    for (int r = 0; r < 16; ++r) CHECK(mm.T2.row(r).sum() == 1.0);
  }
  SUBCASE("a missing product names the statistic") {
    const auto basis = gaussian_basis_1d();
    try {
      // c_h = [x^2]: the product x^4 is not in the basis
      (void)models::build_conjugate_maps(basis, {1},
                                         Eigen::MatrixXd::Identity(1, 1),
                                         Eigen::MatrixXd::Identity(1, 1));
      FAIL("expected NotConjugateError");
    } catch (const NotConjugateError& e) {
      CHECK(e.missing_statistic() == "x1^2*x1^2");
    }
  }
}

TEST_CASE("conjugacy identity: the likelihood exponent is linear in c") {
  // -0.5 |y - h(x)|^2_{R^-1} + 0.5 |y|^2_{R^-1} = c(x)^T (K1 y - theta_l0)
  const auto basis = vdp_basis();
  const std::vector<int> h_index = {14, 15};
  Eigen::MatrixXd R(2, 2);
  R << 1.3, 0.2, 0.2, 0.9;
  const auto mm = models::build_conjugate_maps(
      basis, h_index, Eigen::MatrixXd::Identity(2, 2), R);
  const Eigen::MatrixXd r_inv = R.inverse();
  Rng rng(9, "probe");
  for (int t = 0; t < 30; ++t) {
    Eigen::VectorXd x(2), y(2);
    x << rng.normal(), rng.normal();
    y << rng.normal(), rng.normal();
    const Eigen::VectorXd h = x.array().sin().matrix();
    const double lhs = -0.5 * ((y - h).dot(r_inv * (y - h))) +
                       0.5 * y.dot(r_inv * y);
    const Eigen::VectorXd c = basis.values(x);
    const double rhs = c.dot(mm.K1 * y - mm.theta_l0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("Euler-Heun path simulation") {
  SUBCASE("zero drift and diffusion give a constant path") {
    const auto model = models::make_ou(1, 0.0, 0.0);
    Rng rng(10, "path");
    const auto path = models::euler_heun_path(
        model, Eigen::VectorXd::Constant(1, 1.5), 0.01, 100, rng);
    for (int k = 0; k <= 100; ++k) CHECK(path(0, k) == 1.5);
  }
  SUBCASE("deterministic limit integrates the ODE") {
    const auto model = models::make_ou(1, 1.0, 0.0);
    Rng rng(10, "path");
    const auto path = models::euler_heun_path(
        model, Eigen::VectorXd::Constant(1, 1.0), 1e-3, 1000, rng);
    CHECK(std::abs(path(0, 1000) - std::exp(-1.0)) < 1e-3);
  }
  SUBCASE("stationary variance over many paths") {
    const auto model = models::make_ou(1, 1.0, std::sqrt(2.0));
    const int n_paths = 10000;
    const int n_steps = 100;  // t = 1 at dt = 0.01
    double sum = 0.0, sum_sq = 0.0;
    for (int p = 0; p < n_paths; ++p) {
      Rng rng(p, "ou-var");
      const auto path = models::euler_heun_path(
          model, Eigen::VectorXd::Zero(1), 0.01, n_steps, rng);
      const double v = path(0, n_steps);
      sum += v;
      sum_sq += v * v;
    }
    const double mean = sum / n_paths;
    const double var = sum_sq / n_paths - mean * mean;
    const double expected = 1.0 - std::exp(-2.0);
    const double se = expected * std::sqrt(2.0 / (n_paths - 1.0));
    CHECK(std::abs(var - expected) < 3.0 * se);
  }
}

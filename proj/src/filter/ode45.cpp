#include "cdpf/filter/ode45.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cdpf/util/errors.hpp"

namespace cdpf::filter {

namespace {

// Tsitouras 5(4) coefficients.
constexpr double c2 = 0.161;
constexpr double c3 = 0.327;
constexpr double c4 = 0.9;
constexpr double c5 = 0.9800255409045097;

constexpr double a21 = 0.161;
constexpr double a31 = -0.008480655492356989;
constexpr double a32 = 0.335480655492357;
constexpr double a41 = 2.8971530571054935;
constexpr double a42 = -6.359448489975075;
constexpr double a43 = 4.3622954328695815;
constexpr double a51 = 5.325864828439257;
constexpr double a52 = -11.748883564062828;
constexpr double a53 = 7.4955393428898365;
constexpr double a54 = -0.09249506636175525;
constexpr double a61 = 5.86145544294642;
constexpr double a62 = -12.92096931784711;
constexpr double a63 = 8.159367898576159;
constexpr double a64 = -0.071584973281401;
constexpr double a65 = -0.028269050394068383;

constexpr double b1 = 0.09646076681806523;
constexpr double b2 = 0.01;
constexpr double b3 = 0.4798896504144996;
constexpr double b4 = 1.379008574103742;
constexpr double b5 = -3.290069515436081;
constexpr double b6 = 2.324710524099774;

// 5th-minus-4th order weights; they sum to zero.
constexpr double bt1 = -0.00178001105222577714;
constexpr double bt2 = -0.0008164344596567469;
constexpr double bt3 = 0.007880878010261995;
constexpr double bt4 = -0.1447110071732629;
constexpr double bt5 = 0.5823571654525552;
constexpr double bt6 = -0.45808210592918697;
constexpr double bt7 = 0.015151515151515152;

}  // namespace

OdeStats integrate_adaptive(
    const std::function<void(double, const Eigen::VectorXd&, Eigen::VectorXd&)>& f,
    Eigen::VectorXd& y, double t0, double t1, const OdeConfig& cfg) {
  OdeStats stats;
  const Eigen::Index n = y.size();
  Eigen::VectorXd k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
  Eigen::VectorXd tmp(n), y_new(n), err(n);

  double t = t0;
  const double span = t1 - t0;
  if (!(span > 0.0)) return stats;

  // If the initial state is invalid this throws through to the caller.
  f(t, y, k1);

  // crude but deterministic initial step from the first derivative scale
  double d0 = 0.0, d1 = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double sc = cfg.abs_tol + cfg.rel_tol * std::abs(y[i]);
    d0 += (y[i] / sc) * (y[i] / sc);
    d1 += (k1[i] / sc) * (k1[i] / sc);
  }
  double h = (d0 > 0.0 && d1 > 0.0) ? 0.01 * std::sqrt(d0 / d1) : span * 1e-3;
  h = std::min(h, span);

  double err_old = 1e-4;
  bool fsal_valid = true;

  while (t < t1) {
    if (stats.accepted + stats.rejected >= cfg.max_steps) {
      throw PredictionFailureError(
          "adaptive integration exceeded the step budget");
    }
    if (h < 1e-14 * std::max(1.0, std::abs(t))) {
      throw PredictionFailureError("adaptive step size underflow");
    }
    if (t + h > t1) h = t1 - t;

    if (!fsal_valid) {
      f(t, y, k1);  // at an accepted state; an invalid state throws through
      fsal_valid = true;
    }
    bool stage_failed = false;
    try {
      tmp = y + h * (a21 * k1);
      f(t + c2 * h, tmp, k2);
      tmp = y + h * (a31 * k1 + a32 * k2);
      f(t + c3 * h, tmp, k3);
      tmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
      f(t + c4 * h, tmp, k4);
      tmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
      f(t + c5 * h, tmp, k5);
      tmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
      f(t + h, tmp, k6);
      y_new = y + h * (b1 * k1 + b2 * k2 + b3 * k3 + b4 * k4 + b5 * k5 +
                       b6 * k6);
      f(t + h, y_new, k7);
    } catch (const PredictionFailureError&) {
      throw;  // unrecoverable by a smaller step
    } catch (const std::exception&) {
      stage_failed = true;
    }

    double err_norm;
    if (stage_failed) {
      err_norm = std::numeric_limits<double>::infinity();
    } else {
      err = h * (bt1 * k1 + bt2 * k2 + bt3 * k3 + bt4 * k4 + bt5 * k5 +
                 bt6 * k6 + bt7 * k7);
      double acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double sc =
            cfg.abs_tol +
            cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
        acc += (err[i] / sc) * (err[i] / sc);
      }
      err_norm = std::sqrt(acc / static_cast<double>(n));
      if (!std::isfinite(err_norm)) err_norm = std::numeric_limits<double>::infinity();
    }

    if (err_norm <= 1.0) {
      t += h;
      y = y_new;
      k1 = k7;  // FSAL
      ++stats.accepted;
      double fac;
      if (err_norm == 0.0) {
        fac = cfg.fac_max;
      } else {
        fac = cfg.safety * std::pow(err_norm, -cfg.alpha) *
              std::pow(err_old, cfg.beta);
        fac = std::clamp(fac, cfg.fac_min, cfg.fac_max);
      }
      err_old = std::max(err_norm, 1e-4);
      h *= fac;
    } else {
      ++stats.rejected;
      if (std::isinf(err_norm)) {
        h *= 0.25;
        fsal_valid = false;
      } else {
        const double fac =
            std::clamp(cfg.safety * std::pow(err_norm, -cfg.alpha),
                       cfg.fac_min, 1.0);
        h *= fac;
      }
    }
  }
  return stats;
}

}  // namespace cdpf::filter

#pragma once

#include <cmath>
#include <limits>

namespace cdpf::quad {

// Inverse error function.  A Winitzki-style closed-form initial guess
// (~1e-3 relative) followed by Newton corrections on erf; the iteration is
// quadratic so three steps reach ~1e-16, well below quadrature error.
inline double erfinv(double x) {
  if (x <= -1.0 || x >= 1.0) {
    if (x == 1.0) return std::numeric_limits<double>::infinity();
    if (x == -1.0) return -std::numeric_limits<double>::infinity();
    return std::numeric_limits<double>::quiet_NaN();
  }
  if (x == 0.0) return 0.0;

  constexpr double a = 0.147;
  const double ln1mx2 = std::log1p(-x * x);
  const double t = 2.0 / (3.14159265358979323846 * a) + 0.5 * ln1mx2;
  double y = std::sqrt(std::sqrt(t * t - ln1mx2 / a) - t);
  if (x < 0.0) y = -y;

  constexpr double half_sqrt_pi = 0.88622692545275801364908374167057;
  for (int iter = 0; iter < 3; ++iter) {
    const double err = std::erf(y) - x;
    y -= err * half_sqrt_pi * std::exp(y * y);
  }
  return y;
}

}  // namespace cdpf::quad

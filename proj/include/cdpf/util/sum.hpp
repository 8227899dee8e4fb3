#pragma once

#include <cstddef>
#include <span>

namespace cdpf {

// Pairwise summation over a contiguous range in index order.  The reduction
// tree depends only on the length, so results are bit-reproducible across
// platforms and independent of any outer parallel decomposition.
inline double pairwise_sum(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = v[0];
    for (std::size_t i = 1; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace cdpf

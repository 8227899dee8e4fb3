#include "cdpf/quad/sparse_grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "cdpf/quad/erfinv.hpp"
#include "cdpf/util/errors.hpp"
#include "cdpf/util/sum.hpp"

namespace cdpf::quad {

namespace {

constexpr int kKeyBits = 9;  // finest table has 511 nodes
constexpr int kMaxGridDim = 7;

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

BijectionParams BijectionParams::from_moments(Eigen::VectorXd mu,
                                              Eigen::MatrixXd sigma) {
  BijectionParams xi;
  xi.mu = std::move(mu);
  xi.sigma = 0.5 * (sigma + sigma.transpose());
  Eigen::LLT<Eigen::MatrixXd> llt(xi.sigma);
  if (llt.info() != Eigen::Success) {
    throw DegenerateCovarianceError(
        "Cholesky factorization of bijection covariance failed");
  }
  xi.chol = llt.matrixL();
  return xi;
}

double BijectionParams::jacobian() const {
  const int d = dim();
  double det_l = 1.0;
  for (int i = 0; i < d; ++i) det_l *= chol(i, i);
  return std::pow(2.0, 0.5 * d) * det_l;
}

SparseGrid build_grid(int dim, int level, Rule rule) {
  if (dim < 1 || dim > kMaxGridDim) {
    throw std::invalid_argument("grid dimension must be in [1, 7]");
  }
  if (level < 0 || level > kMaxUnidimLevel) {
    throw UnsupportedLevelError(level, kMaxUnidimLevel);
  }

  std::vector<UnidimRule> rules;
  rules.reserve(level + 1);
  for (int l = 0; l <= level; ++l) rules.push_back(unidim_rule(rule, l));
  const UnidimRule& finest = rules.back();

  // Exact position of each node of level l inside the finest table.  The
  // family is nested and all levels come from one generated table, so the
  // shared doubles are bit-identical and binary search on the value is exact.
  std::vector<std::vector<std::uint32_t>> pos(level + 1);
  for (int l = 0; l <= level; ++l) {
    pos[l].resize(rules[l].nodes.size());
    for (std::size_t j = 0; j < rules[l].nodes.size(); ++j) {
      const auto it = std::lower_bound(finest.nodes.begin(),
                                       finest.nodes.end(), rules[l].nodes[j]);
      if (it == finest.nodes.end() || *it != rules[l].nodes[j]) {
        throw std::logic_error("nested rule tables are inconsistent");
      }
      pos[l][j] = static_cast<std::uint32_t>(it - finest.nodes.begin());
    }
  }

  // Combination technique: coefficients (-1)^(level-q) C(dim-1, level-q) on
  // the window max(0, level-dim+1) <= q <= level; nodes merged by packed
  // integer key.
  std::map<std::uint64_t, double> acc;
  std::vector<int> idx(dim);
  std::vector<int> multi(dim);

  auto add_tensor = [&](const std::vector<int>& levels, double coef) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      std::uint64_t key = 0;
      double w = coef;
      for (int i = 0; i < dim; ++i) {
        key = (key << kKeyBits) | pos[levels[i]][idx[i]];
        w *= rules[levels[i]].weights[idx[i]];
      }
      acc[key] += w;
      int i = dim - 1;
      for (; i >= 0; --i) {
        if (++idx[i] < static_cast<int>(rules[levels[i]].nodes.size())) break;
        idx[i] = 0;
      }
      if (i < 0) break;
    }
  };

  std::function<void(int, int, double)> enumerate = [&](int pos_i, int rem,
                                                        double coef) {
    if (pos_i == dim - 1) {
      multi[pos_i] = rem;
      add_tensor(multi, coef);
      return;
    }
    for (int l = 0; l <= rem; ++l) {
      multi[pos_i] = l;
      enumerate(pos_i + 1, rem - l, coef);
    }
  };

  const int q_lo = std::max(0, level - dim + 1);
  for (int q = q_lo; q <= level; ++q) {
    const double coef =
        static_cast<double>(((level - q) % 2 == 0 ? 1 : -1) *
                            binomial(dim - 1, level - q));
    enumerate(0, q, coef);
  }

  SparseGrid grid;
  grid.dim = dim;
  grid.level = level;
  grid.rule = rule;
  const Eigen::Index n = static_cast<Eigen::Index>(acc.size());
  grid.nodes.resize(dim, n);
  grid.weights.resize(n);
  grid.gauss_nodes.resize(dim, n);
  grid.gauss_weights.resize(n);

  const double log_half_sqrt_pi = std::log(0.5 * std::sqrt(
      3.14159265358979323846));
  Eigen::Index col = 0;
  for (const auto& [key, w] : acc) {
    double norm2 = 0.0;
    for (int i = dim - 1; i >= 0; --i) {
      const std::uint32_t p =
          static_cast<std::uint32_t>((key >> (kKeyBits * (dim - 1 - i))) &
                                     ((1u << kKeyBits) - 1));
      const double x = finest.nodes[p];
      const double y = erfinv(x);
      grid.nodes(i, col) = x;
      grid.gauss_nodes(i, col) = y;
      norm2 += y * y;
    }
    grid.weights(col) = w;
    grid.gauss_weights(col) = std::exp(dim * log_half_sqrt_pi + norm2) * w;
    ++col;
  }
  return grid;
}

Eigen::MatrixXd map_to_state_space(const SparseGrid& grid,
                                   const BijectionParams& xi) {
  if (grid.dim != xi.dim()) {
    throw std::invalid_argument("grid/bijection dimension mismatch");
  }
  const double sqrt2 = std::sqrt(2.0);
  return (sqrt2 * xi.chol * grid.gauss_nodes).colwise() + xi.mu;
}

double integrate(const std::function<double(const Eigen::VectorXd&)>& f,
                 const SparseGrid& grid) {
  const Eigen::Index n = grid.size();
  std::vector<double> terms(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v = f(grid.gauss_nodes.col(i));
    if (!std::isfinite(v)) {
      throw IntegrationDomainError(static_cast<std::size_t>(i));
    }
    terms[static_cast<std::size_t>(i)] = grid.gauss_weights(i) * v;
  }
  return pairwise_sum(terms);
}

}  // namespace cdpf::quad

#include "cdpf/expfam/basis.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace cdpf::expfam {

namespace {

double ipow(double x, int n) {
  double r = 1.0;
  while (n-- > 0) r *= x;
  return r;
}

}  // namespace

ProductStatistic::ProductStatistic(Eigen::VectorXi mono_exp,
                                   Eigen::VectorXi sin_exp)
    : mono_(std::move(mono_exp)), sin_(std::move(sin_exp)) {
  if (mono_.size() != sin_.size()) {
    throw std::invalid_argument("exponent vectors must have equal length");
  }
  if ((mono_.array() < 0).any() || (sin_.array() < 0).any()) {
    throw std::invalid_argument("exponents must be nonnegative");
  }
  if (mono_.size() > 8) {
    throw std::invalid_argument("product statistics support at most 8 dimensions");
  }
}

void ProductStatistic::factor_derivs(double x, int a, int b, double& u,
                                     double& du, double& ddu) {
  if (b == 0) {
    u = ipow(x, a);
    du = a > 0 ? a * ipow(x, a - 1) : 0.0;
    ddu = a > 1 ? static_cast<double>(a) * (a - 1) * ipow(x, a - 2) : 0.0;
    return;
  }
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double xa = ipow(x, a);
  const double sb = ipow(s, b);
  const double sbm1 = ipow(s, b - 1);
  u = xa * sb;
  du = b * xa * sbm1 * c;
  ddu = -static_cast<double>(b) * xa * sb;
  if (b > 1) ddu += static_cast<double>(b) * (b - 1) * xa * ipow(s, b - 2) * c * c;
  if (a > 0) {
    const double xam1 = a * ipow(x, a - 1);
    du += xam1 * sb;
    ddu += 2.0 * xam1 * b * sbm1 * c;
    if (a > 1) ddu += static_cast<double>(a) * (a - 1) * ipow(x, a - 2) * sb;
  }
}

double ProductStatistic::value(const Eigen::VectorXd& x) const {
  double v = 1.0;
  for (int i = 0; i < mono_.size(); ++i) {
    if (mono_[i] > 0) v *= ipow(x[i], mono_[i]);
    if (sin_[i] > 0) v *= ipow(std::sin(x[i]), sin_[i]);
  }
  return v;
}

void ProductStatistic::gradient(const Eigen::VectorXd& x,
                                Eigen::Ref<Eigen::VectorXd> out) const {
  const int d = static_cast<int>(mono_.size());
  double u[8], du[8], ddu[8];
  for (int i = 0; i < d; ++i) factor_derivs(x[i], mono_[i], sin_[i], u[i], du[i], ddu[i]);
  for (int i = 0; i < d; ++i) {
    double g = du[i];
    for (int j = 0; j < d; ++j) {
      if (j != i) g *= u[j];
    }
    out[i] = g;
  }
}

void ProductStatistic::hessian(const Eigen::VectorXd& x,
                               Eigen::Ref<Eigen::MatrixXd> out) const {
  const int d = static_cast<int>(mono_.size());
  double u[8], du[8], ddu[8];
  for (int i = 0; i < d; ++i) factor_derivs(x[i], mono_[i], sin_[i], u[i], du[i], ddu[i]);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      double h = (i == j) ? ddu[i] : du[i] * du[j];
      for (int k = 0; k < d; ++k) {
        if (k != i && k != j) h *= u[k];
      }
      out(i, j) = h;
      out(j, i) = h;
    }
  }
}

std::string ProductStatistic::label() const {
  std::string s;
  auto append = [&s](const std::string& base, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += base;
    if (e > 1) s += "^" + std::to_string(e);
  };
  for (int i = 0; i < mono_.size(); ++i) {
    append("x" + std::to_string(i + 1), mono_[i]);
  }
  for (int i = 0; i < sin_.size(); ++i) {
    append("sin(x" + std::to_string(i + 1) + ")", sin_[i]);
  }
  return s.empty() ? "1" : s;
}

ProductStatistic parse_statistic(const std::string& text, int dim) {
  Eigen::VectorXi mono = Eigen::VectorXi::Zero(dim);
  Eigen::VectorXi sinexp = Eigen::VectorXi::Zero(dim);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse statistic '" + text + "': " + why);
  };
  auto parse_int = [&]() -> int {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("expected an integer");
    return std::stoi(text.substr(start, i - start));
  };

  bool expect_factor = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) {
      if (expect_factor) fail("dangling '*'");
      break;
    }
    if (!expect_factor) {
      if (text[i] != '*') fail("expected '*'");
      ++i;
      expect_factor = true;
      continue;
    }
    bool is_sin = false;
    if (text.compare(i, 4, "sin(") == 0) {
      is_sin = true;
      i += 4;
      skip_ws();
    }
    if (i >= text.size() || text[i] != 'x') fail("expected variable");
    ++i;
    const int var = parse_int();
    if (var < 1 || var > dim) fail("variable index out of range");
    if (is_sin) {
      skip_ws();
      if (i >= text.size() || text[i] != ')') fail("expected ')'");
      ++i;
    }
    int power = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      power = parse_int();
      if (power < 1) fail("powers must be positive");
    }
    if (is_sin) {
      sinexp[var - 1] += power;
    } else {
      mono[var - 1] += power;
    }
    expect_factor = false;
  }
  if (mono.sum() + sinexp.sum() == 0) fail("empty product");
  return {mono, sinexp};
}

StatisticsBasis StatisticsBasis::build(int dim, const BasisSpec& spec) {
  if (dim < 1 || dim > 7) throw std::invalid_argument("basis dimension must be in [1, 7]");
  if (spec.monomial_order < 2) {
    throw std::invalid_argument(
        "monomial_order must be >= 2 (the basis must contain x_i and x_i*x_j)");
  }
  std::vector<std::shared_ptr<const Statistic>> entries;

  // multi-indices of one total degree, lexicographically descending
  std::vector<Eigen::VectorXi> level;
  Eigen::VectorXi alpha = Eigen::VectorXi::Zero(dim);
  std::function<void(int, int)> emit = [&](int pos, int rem) {
    if (pos == dim - 1) {
      alpha[pos] = rem;
      level.push_back(alpha);
      return;
    }
    for (int a = rem; a >= 0; --a) {
      alpha[pos] = a;
      emit(pos + 1, rem - a);
    }
  };
  for (int deg = 1; deg <= spec.monomial_order; ++deg) {
    level.clear();
    emit(0, deg);
    for (const auto& a : level) {
      entries.push_back(std::make_shared<ProductStatistic>(
          a, Eigen::VectorXi::Zero(dim)));
    }
  }
  for (const auto& text : spec.augment) {
    entries.push_back(std::make_shared<ProductStatistic>(parse_statistic(text, dim)));
  }
  return StatisticsBasis(dim, std::move(entries));
}

StatisticsBasis::StatisticsBasis(
    int dim, std::vector<std::shared_ptr<const Statistic>> entries)
    : dim_(dim), entries_(std::move(entries)) {
  const int m = size();
  labels_.reserve(m);
  for (int i = 0; i < m; ++i) labels_.push_back(entries_[i]->label());

  product_forms_.assign(m, {});
  product_entry_.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    if (const auto* p = dynamic_cast<const ProductStatistic*>(entries_[i].get())) {
      product_forms_[i] = {p->mono_exp(), p->sin_exp()};
      product_entry_[i] = i;
    }
  }

  // T_mu and the x_i x_j index map
  t_mu_ = Eigen::MatrixXd::Zero(dim_, m);
  second_idx_ = Eigen::MatrixXi::Constant(dim_, dim_, -1);
  for (int i = 0; i < dim_; ++i) {
    Eigen::VectorXi ei = Eigen::VectorXi::Zero(dim_);
    ei[i] = 1;
    const int k = find_entry(ei, Eigen::VectorXi::Zero(dim_));
    if (k < 0) throw std::invalid_argument("basis is missing the statistic x" + std::to_string(i + 1));
    t_mu_(i, k) = 1.0;
    for (int j = 0; j <= i; ++j) {
      Eigen::VectorXi eij = Eigen::VectorXi::Zero(dim_);
      eij[i] += 1;
      eij[j] += 1;
      const int k2 = find_entry(eij, Eigen::VectorXi::Zero(dim_));
      if (k2 < 0) {
        throw std::invalid_argument("basis is missing the statistic x" +
                                    std::to_string(i + 1) + "*x" +
                                    std::to_string(j + 1));
      }
      second_idx_(i, j) = k2;
      second_idx_(j, i) = k2;
    }
  }
}

Eigen::VectorXd StatisticsBasis::values(const Eigen::VectorXd& x) const {
  Eigen::VectorXd out(size());
  for (int i = 0; i < size(); ++i) out[i] = entries_[i]->value(x);
  return out;
}

Eigen::MatrixXd StatisticsBasis::values_at(const Eigen::MatrixXd& X) const {
  Eigen::MatrixXd out(size(), X.cols());
  for (Eigen::Index c = 0; c < X.cols(); ++c) {
    const Eigen::VectorXd x = X.col(c);
    for (int i = 0; i < size(); ++i) out(i, c) = entries_[i]->value(x);
  }
  return out;
}

Eigen::MatrixXd StatisticsBasis::second_moment_map(
    const Eigen::VectorXd& v) const {
  Eigen::MatrixXd out(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) out(i, j) = v[second_idx_(i, j)];
  }
  return out;
}

int StatisticsBasis::find_entry(const Eigen::VectorXi& mono,
                                const Eigen::VectorXi& sinexp) const {
  for (int i = 0; i < size(); ++i) {
    if (product_entry_[i] < 0) continue;
    if (product_forms_[i].first == mono && product_forms_[i].second == sinexp) {
      return i;
    }
  }
  return -1;
}

int StatisticsBasis::find_product(int i, int j) const {
  if (product_entry_[i] < 0 || product_entry_[j] < 0) return -1;
  const Eigen::VectorXi mono = product_forms_[i].first + product_forms_[j].first;
  const Eigen::VectorXi se = product_forms_[i].second + product_forms_[j].second;
  return find_entry(mono, se);
}

double StatisticsBasis::gram_condition(const Eigen::MatrixXd& probes) const {
  const Eigen::Index n = probes.cols();
  Eigen::MatrixXd v(size() + 1, n);
  v.row(0).setOnes();
  v.bottomRows(size()) = values_at(probes);
  const Eigen::MatrixXd gram = (v * v.transpose()) / static_cast<double>(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo <= 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

bool StatisticsBasis::gram_full_rank(const Eigen::MatrixXd& probes,
                                     double tol) const {
  const double cond = gram_condition(probes);
  return std::isfinite(cond) && 1.0 / cond > tol;
}

}  // namespace cdpf::expfam

#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

namespace cdpf::expfam {

// One natural statistic: value, gradient and Hessian are all closed-form.
class Statistic {
 public:
  virtual ~Statistic() = default;
  virtual double value(const Eigen::VectorXd& x) const = 0;
  virtual void gradient(const Eigen::VectorXd& x,
                        Eigen::Ref<Eigen::VectorXd> out) const = 0;
  virtual void hessian(const Eigen::VectorXd& x,
                       Eigen::Ref<Eigen::MatrixXd> out) const = 0;
  virtual std::string label() const = 0;
};

// prod_i x_i^a_i * sin(x_i)^b_i with a, b >= 0.  Covers monomials and the
// trigonometric augmentations the config grammar admits.
class ProductStatistic : public Statistic {
 public:
  ProductStatistic(Eigen::VectorXi mono_exp, Eigen::VectorXi sin_exp);

  double value(const Eigen::VectorXd& x) const override;
  void gradient(const Eigen::VectorXd& x,
                Eigen::Ref<Eigen::VectorXd> out) const override;
  void hessian(const Eigen::VectorXd& x,
               Eigen::Ref<Eigen::MatrixXd> out) const override;
  std::string label() const override;

  const Eigen::VectorXi& mono_exp() const { return mono_; }
  const Eigen::VectorXi& sin_exp() const { return sin_; }
  int degree() const { return mono_.sum() + sin_.sum(); }

 private:
  // value/first/second derivative of the coordinate factor x^a sin(x)^b
  static void factor_derivs(double x, int a, int b, double& u, double& du,
                            double& ddu);

  Eigen::VectorXi mono_;
  Eigen::VectorXi sin_;
};

// Parses the config grammar: products of optionally-powered factors
// "x<i>" and "sin(x<i>)", e.g. "x1^2*sin(x2)".  Throws std::invalid_argument
// on malformed input or out-of-range variables.
ProductStatistic parse_statistic(const std::string& text, int dim);

struct BasisSpec {
  int monomial_order = 2;
  std::vector<std::string> augment;
};

// Ordered natural statistics c with the index maps the filter needs.
class StatisticsBasis {
 public:
  // Monomials 1 <= |alpha| <= monomial_order in graded ordering (degree
  // ascending, lexicographically descending within a degree), followed by
  // the augmentation entries in config order.  monomial_order >= 2 so that
  // T_mu and Phi_Sigma exist.
  static StatisticsBasis build(int dim, const BasisSpec& spec);

  // Arbitrary entries (tests use this to inject non-product statistics).
  StatisticsBasis(int dim, std::vector<std::shared_ptr<const Statistic>> entries);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const Statistic& entry(int i) const { return *entries_[i]; }
  const std::string& label(int i) const { return labels_[i]; }

  Eigen::VectorXd values(const Eigen::VectorXd& x) const;
  // columns of X are points; returns size() x N
  Eigen::MatrixXd values_at(const Eigen::MatrixXd& X) const;

  // T_mu (d x m): T_mu * c(x) = x
  const Eigen::MatrixXd& mean_map() const { return t_mu_; }
  // Phi_Sigma(v) (d x d): Phi_Sigma(c(x)) = x x^T
  Eigen::MatrixXd second_moment_map(const Eigen::VectorXd& v) const;

  // Index of the product-form statistic with the given exponents, -1 if the
  // basis has no such entry.
  int find_entry(const Eigen::VectorXi& mono, const Eigen::VectorXi& sinexp) const;
  // Index of entry(i)*entry(j) when both are product statistics, -1 otherwise.
  int find_product(int i, int j) const;

  // Smallest/largest eigenvalue ratio of the Gram matrix of [1, c] evaluated
  // at the probe points (columns).  Linear independence holds when the
  // relative smallest eigenvalue exceeds tol.
  double gram_condition(const Eigen::MatrixXd& probes) const;
  bool gram_full_rank(const Eigen::MatrixXd& probes, double tol = 1e-12) const;

 private:
  int dim_ = 0;
  std::vector<std::shared_ptr<const Statistic>> entries_;
  std::vector<std::string> labels_;
  Eigen::MatrixXd t_mu_;
  Eigen::MatrixXi second_idx_;  // d x d -> basis index of x_i x_j
  std::vector<std::pair<Eigen::VectorXi, Eigen::VectorXi>> product_forms_;
  std::vector<int> product_entry_;  // parallel to product_forms_
};

}  // namespace cdpf::expfam

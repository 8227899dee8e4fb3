#pragma once

#include <stdexcept>
#include <string>

namespace cdpf {

// Grid level outside the embedded rule tables.
class UnsupportedLevelError : public std::runtime_error {
 public:
  UnsupportedLevelError(int requested, int max_level)
      : std::runtime_error("quadrature level " + std::to_string(requested) +
                           " exceeds embedded tables (max level " +
                           std::to_string(max_level) + ")"),
        requested_(requested),
        max_level_(max_level) {}
  int requested() const { return requested_; }
  int max_level() const { return max_level_; }

 private:
  int requested_;
  int max_level_;
};

// Non-finite integrand value at a quadrature node.
class IntegrationDomainError : public std::runtime_error {
 public:
  explicit IntegrationDomainError(std::size_t node_index)
      : std::runtime_error("non-finite integrand value at quadrature node " +
                           std::to_string(node_index)),
        node_index_(node_index) {}
  std::size_t node_index() const { return node_index_; }

 private:
  std::size_t node_index_;
};

// theta outside the numerically representable natural-parameter domain.
class InvalidParameterError : public std::runtime_error {
 public:
  explicit InvalidParameterError(const std::string& what)
      : std::runtime_error(what) {}
};

// Covariance lost positive definiteness.
class DegenerateCovarianceError : public std::runtime_error {
 public:
  explicit DegenerateCovarianceError(const std::string& what)
      : std::runtime_error(what) {}
};

// Adaptive ODE integration could not complete (underflow / step budget).
class PredictionFailureError : public std::runtime_error {
 public:
  explicit PredictionFailureError(const std::string& what)
      : std::runtime_error(what) {}
};

// Measurement likelihood is not conjugate for the chosen basis.
class NotConjugateError : public std::runtime_error {
 public:
  explicit NotConjugateError(const std::string& missing)
      : std::runtime_error("likelihood is not conjugate: statistic '" +
                           missing + "' is missing from the basis"),
        missing_(missing) {}
  const std::string& missing_statistic() const { return missing_; }

 private:
  std::string missing_;
};

// KL-projection initialization did not converge.
class InitFailureError : public std::runtime_error {
 public:
  InitFailureError(double residual, int iterations)
      : std::runtime_error("moment-matching initialization did not converge "
                           "(residual " +
                           std::to_string(residual) + " after " +
                           std::to_string(iterations) + " iterations)"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// All particle weights vanished in the update.
class DegenerateLikelihoodError : public std::runtime_error {
 public:
  explicit DegenerateLikelihoodError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace cdpf

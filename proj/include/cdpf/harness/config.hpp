#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "cdpf/expfam/basis.hpp"
#include "cdpf/filter/ode45.hpp"
#include "cdpf/filter/regularizer.hpp"
#include "cdpf/quad/rules.hpp"

namespace cdpf::harness {

struct ModelSpec {
  std::string name;  // "ou" | "vdp" | "fhn"
  std::map<std::string, double> params;
};

struct GridSpec {
  quad::Rule rule = quad::Rule::kGaussKronrod;
  int level = 4;
};

struct MeasurementSpec {
  std::string h = "identity";  // "identity" | "sin"
  double sigma_v = 1.0;
  double dt = 1.0;
};

struct MixtureSpec {
  std::vector<double> weights;
  std::vector<Eigen::VectorXd> means;
  std::vector<Eigen::MatrixXd> covs;
};

struct InitSpec {
  double tol = 1e-4;
  int max_iter = 200;
  double gamma = 1.0;
};

struct ExperimentConfig {
  std::string name;
  ModelSpec model;
  expfam::BasisSpec basis;
  GridSpec grid;
  MeasurementSpec measurement;
  MixtureSpec p0;
  std::vector<std::string> methods;
  std::map<std::string, filter::RegularizerConfig> regularizers;
  filter::OdeConfig ode;
  InitSpec init;
  std::vector<std::string> metrics;
  double sde_dt = 2.5e-2;
  int n_seeds = 20;
  int pf_particles = 100000;
  int gsf_mixands = 50;
  int horizon = 5;   // number of measurement steps K
  int sw1_slices = 100;
  std::uint64_t slice_seed = 0;
  std::string out_dir = "out";
};

// Parses and validates a JSON experiment file.  Throws std::runtime_error
// with the offending field on malformed input.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& json_text);

}  // namespace cdpf::harness

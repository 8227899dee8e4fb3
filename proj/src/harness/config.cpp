#include "cdpf/harness/config.hpp"

#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>

namespace cdpf::harness {

namespace {

using nlohmann::json;

double number_or_inf(const json& v, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw std::runtime_error("config field '" + field +
                           "' must be a number or \"inf\"/\"-inf\"");
}

template <typename T>
T require(const json& j, const std::string& field) {
  if (!j.contains(field)) {
    throw std::runtime_error("config is missing required field '" + field + "'");
  }
  try {
    return j.at(field).get<T>();
  } catch (const json::exception& e) {
    throw std::runtime_error("config field '" + field + "': " + e.what());
  }
}

template <typename T>
T optional(const json& j, const std::string& field, T fallback) {
  if (!j.contains(field)) return fallback;
  try {
    return j.at(field).get<T>();
  } catch (const json::exception& e) {
    throw std::runtime_error("config field '" + field + "': " + e.what());
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("config parse error: ") + e.what());
  }

  ExperimentConfig cfg;
  cfg.name = optional<std::string>(j, "name", "experiment");

  const json jm = require<json>(j, "model");
  cfg.model.name = require<std::string>(jm, "name");
  for (const auto& [key, val] : jm.items()) {
    if (key != "name") cfg.model.params[key] = val.get<double>();
  }

  const json jb = require<json>(j, "basis");
  cfg.basis.monomial_order = require<int>(jb, "monomial_order");
  cfg.basis.augment = optional<std::vector<std::string>>(jb, "augment", {});

  const json jg = require<json>(j, "grid");
  const std::string rule = require<std::string>(jg, "rule");
  if (rule == "gauss-patterson") {
    cfg.grid.rule = quad::Rule::kGaussPatterson;
  } else if (rule == "gauss-kronrod") {
    cfg.grid.rule = quad::Rule::kGaussKronrod;
  } else {
    throw std::runtime_error("config field 'grid.rule' must be "
                             "'gauss-patterson' or 'gauss-kronrod'");
  }
  cfg.grid.level = require<int>(jg, "level");

  const json jme = require<json>(j, "measurement");
  cfg.measurement.h = require<std::string>(jme, "h");
  cfg.measurement.sigma_v = require<double>(jme, "sigma_v");
  cfg.measurement.dt = require<double>(jme, "dt");

  const json jp = require<json>(j, "p0");
  cfg.p0.weights = require<std::vector<double>>(jp, "weights");
  const auto means = require<std::vector<std::vector<double>>>(jp, "means");
  for (const auto& mv : means) {
    cfg.p0.means.push_back(
        Eigen::Map<const Eigen::VectorXd>(mv.data(), mv.size()));
  }
  if (jp.contains("covs") && jp.at("covs").is_array()) {
    const auto covs =
        require<std::vector<std::vector<std::vector<double>>>>(jp, "covs");
    for (const auto& cm : covs) {
      const int d = static_cast<int>(cm.size());
      Eigen::MatrixXd c(d, d);
      for (int r = 0; r < d; ++r) {
        for (int cidx = 0; cidx < d; ++cidx) c(r, cidx) = cm[r][cidx];
      }
      cfg.p0.covs.push_back(c);
    }
  } else {
    // "identity" shorthand
    for (std::size_t i = 0; i < cfg.p0.means.size(); ++i) {
      const int d = static_cast<int>(cfg.p0.means[i].size());
      cfg.p0.covs.push_back(Eigen::MatrixXd::Identity(d, d));
    }
  }
  if (cfg.p0.weights.size() != cfg.p0.means.size() ||
      cfg.p0.weights.size() != cfg.p0.covs.size()) {
    throw std::runtime_error("config field 'p0': weights/means/covs size mismatch");
  }

  cfg.methods = require<std::vector<std::string>>(j, "methods");
  if (j.contains("regularizers")) {
    for (const auto& [key, val] : j.at("regularizers").items()) {
      filter::RegularizerConfig rc;
      rc.epsilon = number_or_inf(val.at("epsilon"), key + ".epsilon");
      rc.max_norm = number_or_inf(val.at("max_norm"), key + ".max_norm");
      cfg.regularizers[key] = rc;
    }
  }
  cfg.regularizers.try_emplace("proj", filter::RegularizerConfig::none());
  cfg.regularizers.try_emplace("proj-0", filter::RegularizerConfig::nonnegative());
  cfg.regularizers.try_emplace("proj-b", filter::RegularizerConfig::bounded());

  if (j.contains("ode")) {
    const json jo = j.at("ode");
    cfg.ode.rel_tol = optional<double>(jo, "rel_tol", cfg.ode.rel_tol);
    cfg.ode.abs_tol = optional<double>(jo, "abs_tol", cfg.ode.abs_tol);
    cfg.ode.max_steps = optional<long>(jo, "max_steps", cfg.ode.max_steps);
  }
  if (j.contains("init")) {
    const json ji = j.at("init");
    cfg.init.tol = optional<double>(ji, "tol", cfg.init.tol);
    cfg.init.max_iter = optional<int>(ji, "max_iter", cfg.init.max_iter);
    cfg.init.gamma = optional<double>(ji, "gamma", cfg.init.gamma);
  }

  cfg.metrics = optional<std::vector<std::string>>(
      j, "metrics", {"hellinger", "cross_entropy", "nmse_sq_err"});
  cfg.sde_dt = optional<double>(j, "sde_dt", cfg.sde_dt);
  cfg.n_seeds = optional<int>(j, "n_seeds", cfg.n_seeds);
  cfg.pf_particles = optional<int>(j, "pf_particles", cfg.pf_particles);
  cfg.gsf_mixands = optional<int>(j, "gsf_mixands", cfg.gsf_mixands);
  cfg.horizon = optional<int>(j, "horizon", cfg.horizon);
  cfg.sw1_slices = optional<int>(j, "sw1_slices", cfg.sw1_slices);
  cfg.slice_seed = optional<std::uint64_t>(j, "slice_seed", cfg.slice_seed);
  cfg.out_dir = optional<std::string>(j, "out_dir", cfg.out_dir);

  if (cfg.horizon < 1) throw std::runtime_error("config field 'horizon' must be >= 1");
  if (cfg.n_seeds < 1) throw std::runtime_error("config field 'n_seeds' must be >= 1");
  for (const auto& m : cfg.methods) {
    const bool proj = m.rfind("proj", 0) == 0;
    if (proj && !cfg.regularizers.count(m)) {
      throw std::runtime_error("method '" + m + "' has no regularizer preset");
    }
    if (!proj && m != "pf" && m != "enkf" && m != "gsf") {
      throw std::runtime_error("unknown method '" + m + "'");
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace cdpf::harness

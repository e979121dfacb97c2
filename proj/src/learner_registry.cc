// Copyright 2026 The Bernstein Mechanism Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bernstein/learner_registry.h"

#include <set>

#include "bernstein/errors.h"
#include "bernstein/learners.h"

namespace bernstein {
namespace {

using nlohmann::json;

// Typed, checked access to the learner object.
class Params {
 public:
  Params(const json& object, std::set<std::string> allowed)
      : object_(object) {
    allowed.insert("id");
    for (const auto& [key, value] : object.items()) {
      if (!allowed.count(key)) {
        throw ConfigError("unknown parameter '" + key + "' for learner '" +
                          object.value("id", std::string()) + "'");
      }
    }
  }

  double Number(const char* key, double fallback) const {
    if (!object_.contains(key)) return fallback;
    const json& v = object_.at(key);
    if (!v.is_number()) throw ConfigError(std::string(key) + " must be a number");
    return v.get<double>();
  }

  int Integer(const char* key, int fallback) const {
    if (!object_.contains(key)) return fallback;
    const json& v = object_.at(key);
    if (!v.is_number_integer()) {
      throw ConfigError(std::string(key) + " must be an integer");
    }
    return v.get<int>();
  }

  std::string String(const char* key, const std::string& fallback) const {
    if (!object_.contains(key)) return fallback;
    const json& v = object_.at(key);
    if (!v.is_string()) throw ConfigError(std::string(key) + " must be a string");
    return v.get<std::string>();
  }

  bool Has(const char* key) const { return object_.contains(key); }
  const json& At(const char* key) const { return object_.at(key); }

 private:
  const json& object_;
};

[[noreturn]] void BadChoice(const char* key, const std::string& value) {
  throw ConfigError("unsupported " + std::string(key) + " '" + value + "'");
}

TargetFunction MakeKde(const Params& p, int ell, std::size_t n) {
  if (p.Has("bandwidth_matrix")) {
    if (p.Has("bandwidth")) {
      throw ConfigError("give either bandwidth or bandwidth_matrix, not both");
    }
    const json& rows = p.At("bandwidth_matrix");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(ell)) {
      throw ConfigError("bandwidth_matrix must be an ell x ell array");
    }
    KdeConfig config{Eigen::MatrixXd(ell, ell)};
    for (int r = 0; r < ell; ++r) {
      if (!rows[r].is_array() || rows[r].size() != static_cast<std::size_t>(ell)) {
        throw ConfigError("bandwidth_matrix must be an ell x ell array");
      }
      for (int c = 0; c < ell; ++c) {
        if (!rows[r][c].is_number()) {
          throw ConfigError("bandwidth_matrix entries must be numbers");
        }
        config.bandwidth_matrix(r, c) = rows[r][c].get<double>();
      }
    }
    return KdeTarget(config, ell, n);
  }
  return KdeTarget(KdeConfig::Isotropic(p.Number("bandwidth", 0.1), ell), ell, n);
}

TargetFunction MakePc(const Params& p, int ell, std::size_t n) {
  if (ell != 1) throw ConfigError("pc_regression requires ell = 1");
  PcRegressionConfig config;
  config.bandwidth = p.Number("bandwidth", config.bandwidth);
  config.label_bound = p.Number("label_bound", config.label_bound);
  config.gap_constant = p.Number("gap_constant", config.gap_constant);
  return PcRegressionTarget(config, n);
}

TargetFunction MakeNaiveBayes(const Params& p, int ell, std::size_t n) {
  NaiveBayesConfig config;
  config.bandwidth = p.Number("bandwidth", config.bandwidth);
  config.variance_floor = p.Number("variance_floor", config.variance_floor);
  const std::string likelihood = p.String("likelihood", "kde");
  if (likelihood == "kde") {
    config.likelihood = NbLikelihood::kKde;
  } else if (likelihood == "gaussian_parametric") {
    config.likelihood = NbLikelihood::kGaussianParametric;
  } else {
    BadChoice("likelihood", likelihood);
  }
  return NaiveBayesTarget(config, ell, n);
}

TargetFunction MakeErm(const Params& p, int ell, std::size_t n) {
  ErmConfig config;
  config.C = p.Number("C", config.C);
  config.label_bound = p.Number("label_bound", config.label_bound);
  config.tolerance = p.Number("tolerance", config.tolerance);
  config.max_iterations = p.Integer("max_iterations", config.max_iterations);
  config.kernel.sigma = p.Number("sigma", config.kernel.sigma);
  const std::string loss = p.String("loss", "hinge");
  if (loss == "hinge") {
    config.loss = LossKind::kHinge;
  } else if (loss == "logistic") {
    config.loss = LossKind::kLogistic;
  } else if (loss == "square") {
    config.loss = LossKind::kSquare;
  } else {
    BadChoice("loss", loss);
  }
  const std::string kernel = p.String("kernel", "rbf");
  if (kernel == "rbf") {
    config.kernel.kind = KernelKind::kRbf;
  } else if (kernel == "linear") {
    config.kernel.kind = KernelKind::kLinear;
  } else {
    BadChoice("kernel", kernel);
  }
  return ErmTarget(config, ell, n);
}

TargetFunction MakeLogistic(const Params& p, int ell, std::size_t n) {
  LogisticConfig config;
  config.C = p.Number("C", config.C);
  config.tolerance = p.Number("tolerance", config.tolerance);
  config.max_iterations = p.Integer("max_iterations", config.max_iterations);
  const std::string output = p.String("output", "margin");
  if (output == "margin") {
    config.output = LogisticOutput::kMargin;
  } else if (output == "sigmoid") {
    config.output = LogisticOutput::kSigmoid;
  } else {
    BadChoice("output", output);
  }
  return LogisticRegressionTarget(config, ell, n);
}

}  // namespace

std::vector<std::string> LearnerIds() {
  return {"kde", "pc_regression", "naive_bayes", "erm", "logistic"};
}

LabelKind RequiredLabelKind(const nlohmann::json& learner) {
  const std::string id = learner.value("id", std::string());
  if (id == "kde") return LabelKind::kNone;
  if (id == "pc_regression") return LabelKind::kReal;
  if (id == "naive_bayes" || id == "logistic") return LabelKind::kBinary;
  if (id == "erm") {
    return learner.value("loss", std::string("hinge")) == "square"
               ? LabelKind::kReal
               : LabelKind::kBinary;
  }
  throw ConfigError("unknown learner '" + id + "'");
}

TargetFunction MakeTarget(const nlohmann::json& learner, int ell,
                          std::size_t n) {
  if (!learner.is_object() || !learner.contains("id") ||
      !learner.at("id").is_string()) {
    throw ConfigError("learner must be an object with a string 'id'");
  }
  if (ell < 1) throw ConfigError("ell must be at least 1");
  const std::string id = learner.at("id").get<std::string>();
  if (id == "kde") {
    return MakeKde(Params(learner, {"bandwidth", "bandwidth_matrix"}), ell, n);
  }
  if (id == "pc_regression") {
    return MakePc(Params(learner, {"bandwidth", "label_bound", "gap_constant"}),
                  ell, n);
  }
  if (id == "naive_bayes") {
    return MakeNaiveBayes(
        Params(learner, {"bandwidth", "likelihood", "variance_floor"}), ell, n);
  }
  if (id == "erm") {
    return MakeErm(Params(learner, {"C", "loss", "kernel", "sigma", "label_bound",
                                    "tolerance", "max_iterations"}),
                   ell, n);
  }
  if (id == "logistic") {
    return MakeLogistic(
        Params(learner, {"C", "output", "tolerance", "max_iterations"}), ell, n);
  }
  throw ConfigError("unknown learner '" + id + "'");
}

void SetParam(nlohmann::json& learner, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("parameter '" + assignment + "' is not key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);
  // Numbers and JSON literals (including arrays) parse as JSON; anything
  // else is kept as a string.
  json parsed = json::parse(value, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || parsed.is_object()) {
    learner[key] = value;
  } else {
    learner[key] = std::move(parsed);
  }
}

}  // namespace bernstein

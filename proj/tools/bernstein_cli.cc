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

// bernstein: sanitize a dataset into a private synopsis, answer queries from
// a synopsis, and run utility experiments.
//
// Exit codes: 0 ok, 2 parse error, 3 failed precondition, 4 shape mismatch,
// 5 experiment finished with failed cells.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bernstein/dataset_io.h"
#include "bernstein/dp_mechanism.h"
#include "bernstein/errors.h"
#include "bernstein/experiment_io.h"
#include "bernstein/experiments.h"
#include "bernstein/learner_registry.h"
#include "bernstein/rng.h"
#include "bernstein/synopsis_io.h"

namespace {

using namespace bernstein;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitShape = 4;
constexpr int kExitPartial = 5;

struct SanitizeOptions {
  std::string learner;
  std::vector<std::string> params;
  std::string data;
  double epsilon = 0.0;
  double delta = 0.0;
  double beta = 0.05;
  int h = 1;
  std::string k = "auto";
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct EvaluateOptions {
  std::string synopsis;
  std::string queries;
  int grid = 0;
  bool baseline = false;
  std::string out;
};

struct ExperimentOptions {
  std::string spec;
  std::string out;
};

struct GenerateOptions {
  std::string preset;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ConfigError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int RunSanitize(const SanitizeOptions& o) {
  // Everything that does not need the data is checked first.
  const PrivacyBudget budget{o.epsilon, o.delta};
  budget.Validate();
  AccuracyTarget{o.beta, {}}.Validate();
  if (o.h < 1) throw ConfigError("--h must be at least 1");
  std::optional<int> fixed_k;
  if (o.k != "auto") {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(o.k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != o.k.size() || k < 1) {
      throw ConfigError("--k must be a positive integer or 'auto'");
    }
    fixed_k = k;
  }
  nlohmann::json learner = {{"id", o.learner}};
  for (const auto& p : o.params) SetParam(learner, p);
  RequiredLabelKind(learner);  // rejects unknown learner ids early

  const Dataset dataset = ReadDatasetFile(o.data);
  const TargetFunction target = MakeTarget(learner, dataset.ell(), dataset.size());
  if (target.sensitivity == 0.0) {
    std::cerr << "warning: sensitivity is 0; the release carries no noise\n";
  }
  const int k = fixed_k ? *fixed_k : ChooseK(target, o.epsilon, o.beta, o.h);
  const std::uint64_t seed = o.seed ? *o.seed : EntropySeed();

  const Synopsis synopsis =
      Sanitize(target, dataset, {k, o.h, dataset.ell()}, budget, seed);
  WriteSynopsisFile(o.out, synopsis);

  std::cout << "k=" << k << '\n'
            << "lambda=" << FormatDouble(synopsis.lambda) << '\n'
            << "predicted_error_bound=";
  if (fixed_k) {
    std::cout << "inapplicable (k overridden)\n";
  } else {
    std::cout << FormatDouble(PredictedErrorBound(target, o.epsilon, o.beta, o.h))
              << '\n';
  }
  std::cout << "seed=" << seed << '\n';
  return kExitOk;
}

int RunEvaluate(const EvaluateOptions& o) {
  if (o.queries.empty() == (o.grid == 0)) {
    throw ConfigError("give exactly one of --queries or --grid");
  }
  if (o.grid != 0 && o.grid < 2) throw ConfigError("--grid must be at least 2");
  const Synopsis synopsis = ReadSynopsisFile(o.synopsis);
  const int ell = synopsis.params.ell;

  std::vector<double> points;
  if (!o.queries.empty()) {
    int query_ell = 0;
    points = ReadPointsFile(o.queries, &query_ell);
    if (!points.empty() && query_ell != ell) {
      throw ShapeError("query points have " + std::to_string(query_ell) +
                       " coordinates but the synopsis has ell=" +
                       std::to_string(ell));
    }
  } else {
    const auto axis = UniformAxis(o.grid);
    std::size_t total = 1;
    for (int a = 0; a < ell; ++a) total *= axis.size();
    std::vector<std::size_t> idx(ell, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
      for (int a = 0; a < ell; ++a) points.push_back(axis[idx[a]]);
      for (int a = ell - 1; a >= 0; --a) {
        if (++idx[a] < axis.size()) break;
        idx[a] = 0;
      }
    }
  }

  const BasisTable table = BasisTable::Build(synopsis.params);
  Output out(o.out);
  const std::size_t count = points.size() / static_cast<std::size_t>(ell);
  for (std::size_t i = 0; i < count; ++i) {
    const std::span<const double> y(points.data() + i * ell, ell);
    const double v = o.baseline ? BaselineEvaluate(synopsis, y)
                                : EvaluateSynopsis(synopsis, table, y);
    for (double c : y) out.stream() << FormatDouble(c) << ',';
    out.stream() << FormatDouble(v) << '\n';
  }
  return kExitOk;
}

int RunExperiment(const ExperimentOptions& o) {
  const ExperimentSpec spec = ReadExperimentSpecFile(o.spec);
  const ExperimentReport report = RunUtilityExperiment(spec);
  WriteReportFile(o.out, report);
  if (!report.ok()) {
    std::cerr << report.failures.size() << " cell(s) failed:\n";
    for (const auto& f : report.failures) std::cerr << "  " << f << '\n';
    return kExitPartial;
  }
  return kExitOk;
}

int RunGenerate(const GenerateOptions& o) {
  Dataset data(1, LabelKind::kNone);
  if (o.preset == "kde-mixture") {
    const MixtureComponent components[] = {{0.5, 0.02, 0.4}, {0.75, 0.005, 0.6}};
    data = GenerateMixtureData(o.n ? o.n : 5000, components, o.seed);
  } else if (o.preset == "svm-two-class") {
    Eigen::MatrixXd cov_neg(2, 2);
    cov_neg << 0.01, 0.008, 0.008, 0.015;
    data = GenerateTwoClassGaussian(
        o.n ? o.n : 1500,
        {Eigen::Vector2d(0.3, 0.5), Eigen::Vector2d(0.6, 0.4)},
        {0.01 * Eigen::MatrixXd::Identity(2, 2), cov_neg}, o.seed);
  } else {
    throw ConfigError("unknown preset '" + o.preset + "'");
  }
  Output out(o.out);
  out.stream() << SerializeDataset(data);
  return kExitOk;
}

int ExitCodeFor(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const ShapeError*>(&e)) return kExitShape;
  return kExitPrecondition;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private function release with Bernstein bases"};
  app.require_subcommand(1);
  // --h is the Bernstein order, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  SanitizeOptions so;
  auto* sanitize = app.add_subcommand(
      "sanitize", "Release a perturbed lattice synopsis of a learner's output");
  sanitize->add_option("--learner", so.learner, "kde | pc_regression | naive_bayes | erm | logistic")
      ->required();
  sanitize->add_option("--param", so.params, "Learner parameter key=value (repeatable)");
  sanitize->add_option("--data", so.data, "Dataset file")->required();
  sanitize->add_option("--epsilon", so.epsilon, "Privacy budget epsilon")->required();
  sanitize->add_option("--delta", so.delta, "Privacy budget delta (0 = pure DP)");
  sanitize->add_option("--beta", so.beta, "Failure probability for k selection");
  sanitize->add_option("--h", so.h, "Iterated Bernstein order");
  sanitize->add_option("--k", so.k, "Lattice resolution or 'auto'");
  sanitize->add_option("--seed", so.seed, "Noise seed (default: system entropy)");
  sanitize->add_option("--out", so.out, "Synopsis output file")->required();

  EvaluateOptions eo;
  auto* evaluate = app.add_subcommand(
      "evaluate", "Answer queries from a synopsis without the dataset");
  evaluate->add_option("--synopsis", eo.synopsis, "Synopsis file")->required();
  evaluate->add_option("--queries", eo.queries, "File of query points");
  evaluate->add_option("--grid", eo.grid, "Evaluate on a uniform grid of m points per axis");
  evaluate->add_flag("--baseline", eo.baseline, "Use the nearest-lattice-point baseline");
  evaluate->add_option("--out", eo.out, "Output CSV (default: stdout)");

  ExperimentOptions xo;
  auto* experiment = app.add_subcommand("experiment", "Run a utility experiment");
  experiment->add_option("--spec", xo.spec, "Experiment spec (JSON)")->required();
  experiment->add_option("--out", xo.out, "Report CSV")->required();

  GenerateOptions go;
  auto* generate = app.add_subcommand("generate", "Write a synthetic dataset");
  generate->add_option("--preset", go.preset, "kde-mixture | svm-two-class")->required();
  generate->add_option("--n", go.n, "Records (per class for svm-two-class)");
  generate->add_option("--seed", go.seed, "Generator seed");
  generate->add_option("--out", go.out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*sanitize) return RunSanitize(so);
    if (*evaluate) return RunEvaluate(eo);
    if (*experiment) return RunExperiment(xo);
    if (*generate) return RunGenerate(go);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  }
  return kExitOk;
}

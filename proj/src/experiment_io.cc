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

#include "bernstein/experiment_io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "bernstein/dataset_io.h"
#include "bernstein/errors.h"
#include "bernstein/synopsis_io.h"

namespace bernstein {
namespace {

using nlohmann::json;

template <typename T>
T Get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

ExperimentSpec ParseExperimentSpec(std::string_view text,
                                   const std::filesystem::path& base_dir) {
  const json j = json::parse(text, nullptr, /*allow_exceptions=*/false,
                             /*ignore_comments=*/true);
  if (j.is_discarded() || !j.is_object()) {
    throw ConfigError("experiment spec is not a JSON object");
  }
  static const std::set<std::string> kFields = {
      "learner", "data",   "epsilon_grid",    "h_grid",
      "k",       "repeats", "beta",           "delta",
      "grid_resolution", "seed", "sensitivity_override"};
  for (const auto& [key, value] : j.items()) {
    if (!kFields.count(key)) throw ConfigError("unknown spec field '" + key + "'");
  }

  ExperimentSpec spec;
  spec.learner = Get<json>(j, "learner");
  const json data = Get<json>(j, "data");
  spec.data_generator = Get<std::string>(data, "generator");
  spec.data_seed = data.value("seed", std::uint64_t{0});
  spec.data_params = data.value("params", json::object());
  if (spec.data_generator == "file" && spec.data_params.contains("path")) {
    const std::filesystem::path p = Get<std::string>(spec.data_params, "path");
    if (p.is_relative() && !base_dir.empty()) {
      spec.data_params["path"] = (base_dir / p).string();
    }
  }
  spec.epsilon_grid = Get<std::vector<double>>(j, "epsilon_grid");
  spec.h_grid = Get<std::vector<int>>(j, "h_grid");
  if (j.contains("k")) {
    const json& k = j.at("k");
    if (k.is_string()) {
      if (k.get<std::string>() != "auto") {
        throw ConfigError("field 'k' must be an integer or \"auto\"");
      }
    } else {
      spec.k = Get<int>(j, "k");
    }
  }
  if (j.contains("repeats")) spec.repeats = Get<int>(j, "repeats");
  if (j.contains("beta")) spec.beta = Get<double>(j, "beta");
  if (j.contains("delta")) spec.delta = Get<double>(j, "delta");
  if (j.contains("grid_resolution")) {
    spec.grid_resolution = Get<int>(j, "grid_resolution");
  }
  if (j.contains("seed")) spec.seed = Get<std::uint64_t>(j, "seed");
  if (j.contains("sensitivity_override")) {
    spec.sensitivity_override = Get<double>(j, "sensitivity_override");
  }
  spec.Validate();
  return spec;
}

ExperimentSpec ReadExperimentSpecFile(const std::filesystem::path& path) {
  return ParseExperimentSpec(ReadTextFile(path), path.parent_path());
}

std::string ReportToCsv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "row_type,method,epsilon,h,k,repeat,lambda,sup_error,mean,quantile,"
         "status\n";
  for (const auto& r : report.rows) {
    out << "repeat," << r.method << ',' << FormatDouble(r.epsilon) << ','
        << r.h << ',' << r.k << ',' << r.repeat << ',' << FormatDouble(r.lambda)
        << ',' << (r.failed ? "" : FormatDouble(r.sup_error)) << ",,,"
        << (r.failed ? "failed" : "ok") << '\n';
  }
  for (const auto& a : report.aggregates) {
    out << "aggregate," << a.method << ',' << FormatDouble(a.epsilon) << ','
        << a.h << ',' << a.k << ",," << FormatDouble(a.lambda) << ",,";
    if (a.failed) {
      out << ",,failed\n";
    } else {
      out << FormatDouble(a.mean) << ',' << FormatDouble(a.quantile) << ",ok\n";
    }
  }
  return out.str();
}

void WriteReportFile(const std::filesystem::path& path,
                     const ExperimentReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
  out << ReportToCsv(report);
  if (!out) throw ConfigError("failed writing '" + path.string() + "'");
}

}  // namespace bernstein

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

#include "bernstein/synopsis_io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bernstein/errors.h"
#include "json.hpp"

namespace bernstein {
namespace {

constexpr const char* kFormatName = "bernstein-synopsis";

template <class T>
T Field(const nlohmann::json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(std::string("synopsis is missing field '") + key + "'");
  }
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("synopsis field '") + key +
                     "' has the wrong type");
  }
}

}  // namespace

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string SerializeSynopsis(const Synopsis& s) {
  std::ostringstream out;
  out << "{\n"
      << "  \"format\": \"" << kFormatName << "\",\n"
      << "  \"version\": " << kSynopsisFormatVersion << ",\n"
      << "  \"ell\": " << s.params.ell << ",\n"
      << "  \"k\": " << s.params.k << ",\n"
      << "  \"h\": " << s.params.h << ",\n"
      << "  \"epsilon\": " << FormatDouble(s.budget.epsilon) << ",\n"
      << "  \"delta\": " << FormatDouble(s.budget.delta) << ",\n"
      << "  \"sensitivity\": " << FormatDouble(s.sensitivity) << ",\n"
      << "  \"lambda\": " << FormatDouble(s.lambda) << ",\n"
      << "  \"seed\": " << s.rng_seed << ",\n"
      << "  \"values\": [";
  const auto values = s.noisy_values.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << (i == 0 ? "\n    " : (i % 4 == 0 ? ",\n    " : ", "))
        << FormatDouble(values[i]);
  }
  out << "\n  ]\n}\n";
  return out.str();
}

Synopsis ParseSynopsis(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("synopsis is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("synopsis must be a JSON object");
  if (Field<std::string>(doc, "format") != kFormatName) {
    throw ParseError("not a synopsis file (format field mismatch)");
  }
  const int version = Field<int>(doc, "version");
  if (version != kSynopsisFormatVersion) {
    throw ParseError("unsupported synopsis format version " +
                     std::to_string(version));
  }

  BasisParams params{Field<int>(doc, "k"), Field<int>(doc, "h"),
                     Field<int>(doc, "ell")};
  PrivacyBudget budget{Field<double>(doc, "epsilon"),
                       Field<double>(doc, "delta")};
  const double sensitivity = Field<double>(doc, "sensitivity");
  const double lambda = Field<double>(doc, "lambda");
  const auto seed = Field<std::uint64_t>(doc, "seed");
  auto values = Field<std::vector<double>>(doc, "values");

  try {
    params.Validate();
    LatticeGrid grid(params.k, params.ell);
    const double expected =
        PerturbationScale(sensitivity, params.k, params.ell, budget);
    if (std::abs(expected - lambda) > 1e-12 * std::max(1.0, std::abs(expected))) {
      throw ParseError("synopsis lambda " + FormatDouble(lambda) +
                       " disagrees with its budget and sensitivity (expected " +
                       FormatDouble(expected) + ")");
    }
    return Synopsis{params, CoefficientField(grid, std::move(values)), lambda,
                    budget, sensitivity, seed};
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid synopsis: ") + e.what());
  }
}

void WriteSynopsisFile(const std::filesystem::path& path,
                       const Synopsis& synopsis) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << SerializeSynopsis(synopsis);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

Synopsis ReadSynopsisFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open synopsis file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseSynopsis(buf.str());
}

}  // namespace bernstein

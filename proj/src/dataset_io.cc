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

#include "bernstein/dataset_io.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "bernstein/errors.h"
#include "bernstein/synopsis_io.h"

namespace bernstein {
namespace {

std::string_view StripComment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                           line.back() == '\t')) {
    line.remove_suffix(1);
  }
  return line;
}

double ParseNumber(const std::string& field, std::size_t line) {
  // strtod, unlike from_chars, accepts a leading '+'.
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size() || !std::isfinite(v)) {
    throw ParseError("'" + field + "' is not a finite number", line);
  }
  return v;
}

double ParseBinaryLabel(const std::string& field, std::size_t line) {
  if (field == "+" || field == "+1" || field == "1") return 1.0;
  if (field == "-" || field == "-1") return -1.0;
  throw ParseError("binary label must be one of +, -, +1, -1, 1; got '" +
                       field + "'",
                   line);
}

template <typename Fn>
void ForEachLine(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    fn(StripComment(line), line_no);
  }
}

}  // namespace

std::vector<std::string> SplitFields(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  for (char ch : line) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r') {
      if (!current.empty()) fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) fields.push_back(std::move(current));
  return fields;
}

Dataset ParseDataset(std::string_view text) {
  std::optional<Dataset> dataset;
  std::vector<double> features;
  ForEachLine(text, [&](std::string_view line, std::size_t line_no) {
    const auto fields = SplitFields(line);
    if (fields.empty()) return;
    if (!dataset) {
      if (fields[0] != "bernstein-dataset") {
        throw ParseError("expected header 'bernstein-dataset ell=<n> label=<kind>'",
                         line_no);
      }
      int ell = 0;
      std::optional<LabelKind> kind;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        const auto eq = fields[i].find('=');
        const std::string key = fields[i].substr(0, eq);
        const std::string value =
            eq == std::string::npos ? std::string() : fields[i].substr(eq + 1);
        if (key == "ell") {
          const auto res = std::from_chars(value.data(), value.data() + value.size(), ell);
          if (res.ec != std::errc() || res.ptr != value.data() + value.size() || ell < 1) {
            throw ParseError("ell must be a positive integer", line_no);
          }
        } else if (key == "label") {
          try {
            kind = ParseLabelKind(value);
          } catch (const ConfigError& e) {
            throw ParseError(e.what(), line_no);
          }
        } else {
          throw ParseError("unknown header field '" + fields[i] + "'", line_no);
        }
      }
      if (ell == 0 || !kind) {
        throw ParseError("header must declare ell and label", line_no);
      }
      dataset.emplace(ell, *kind);
      return;
    }
    const int ell = dataset->ell();
    const bool labelled = dataset->label_kind() != LabelKind::kNone;
    const std::size_t expected = static_cast<std::size_t>(ell) + (labelled ? 1 : 0);
    if (fields.size() != expected) {
      std::ostringstream msg;
      msg << "expected " << expected << " fields, found " << fields.size();
      throw ParseError(msg.str(), line_no);
    }
    features.assign(ell, 0.0);
    for (int a = 0; a < ell; ++a) features[a] = ParseNumber(fields[a], line_no);
    std::optional<double> label;
    if (dataset->label_kind() == LabelKind::kBinary) {
      label = ParseBinaryLabel(fields.back(), line_no);
    } else if (labelled) {
      label = ParseNumber(fields.back(), line_no);
    }
    dataset->Add(features, label);
  });
  if (!dataset) throw ParseError("missing dataset header", 1);
  return std::move(*dataset);
}

Dataset ReadDatasetFile(const std::filesystem::path& path) {
  return ParseDataset(ReadTextFile(path));
}

std::string SerializeDataset(const Dataset& dataset) {
  std::ostringstream out;
  out << "bernstein-dataset ell=" << dataset.ell()
      << " label=" << LabelKindName(dataset.label_kind()) << '\n';
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto p = dataset.point(i);
    for (std::size_t a = 0; a < p.size(); ++a) {
      if (a) out << ',';
      out << FormatDouble(p[a]);
    }
    if (dataset.label_kind() == LabelKind::kBinary) {
      out << ',' << (dataset.label(i) > 0 ? "+1" : "-1");
    } else if (dataset.label_kind() == LabelKind::kReal) {
      out << ',' << FormatDouble(dataset.label(i));
    }
    out << '\n';
  }
  return out.str();
}

void WriteDatasetFile(const std::filesystem::path& path, const Dataset& dataset) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
  out << SerializeDataset(dataset);
  if (!out) throw ConfigError("failed writing '" + path.string() + "'");
}

std::vector<double> ParsePoints(std::string_view text, int* ell) {
  std::vector<double> points;
  int width = 0;
  ForEachLine(text, [&](std::string_view line, std::size_t line_no) {
    const auto fields = SplitFields(line);
    if (fields.empty()) return;
    if (width == 0) width = static_cast<int>(fields.size());
    if (static_cast<int>(fields.size()) != width) {
      std::ostringstream msg;
      msg << "expected " << width << " coordinates, found " << fields.size();
      throw ParseError(msg.str(), line_no);
    }
    for (const auto& f : fields) points.push_back(ParseNumber(f, line_no));
  });
  *ell = width;
  return points;
}

std::vector<double> ReadPointsFile(const std::filesystem::path& path, int* ell) {
  return ParsePoints(ReadTextFile(path), ell);
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace bernstein

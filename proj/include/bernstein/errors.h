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

#ifndef BERNSTEIN_ERRORS_H_
#define BERNSTEIN_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bernstein {

// Root of every error raised by the library. Subclasses map one-to-one onto
// the CLI exit-code taxonomy (see tools/bernstein_cli.cc).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (basis index, query point,
// negative scale).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Lattice or operator table would exceed the configured limits.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Dimension or parameter mismatch between two objects that must agree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Invalid privacy budget (epsilon <= 0, delta outside its range).
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Input that is well-formed but degenerate for the requested operation,
// e.g. zero sensitivity passed to choose_k or a single-class dataset.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Invalid learner / generator / experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A dataset violates a learner precondition. `index` names the offending
// record when one exists.
class PreconditionError : public Error {
 public:
  static constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

  explicit PreconditionError(const std::string& what,
                             std::size_t index = kNoIndex)
      : Error(what), index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// The target evaluator produced a non-finite value at a lattice point.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, std::vector<double> point)
      : Error(what), point_(std::move(point)) {}

  const std::vector<double>& point() const { return point_; }

 private:
  std::vector<double> point_;
};

// An iterative learner failed to reach its convergence criterion.
class TrainingError : public Error {
 public:
  TrainingError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  // Final duality gap or gradient norm at the point the solver gave up.
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Malformed text input. `line` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Self-check of the lower-bound construction failed.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace bernstein

#endif  // BERNSTEIN_ERRORS_H_

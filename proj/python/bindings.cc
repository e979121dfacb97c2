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

// Python bindings for the core operations. Learner and experiment
// configurations cross the boundary as JSON text; the package's __init__.py
// accepts plain dicts.

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "bernstein/bernstein_core.h"
#include "bernstein/dataset.h"
#include "bernstein/dp_mechanism.h"
#include "bernstein/errors.h"
#include "bernstein/experiment_io.h"
#include "bernstein/experiments.h"
#include "bernstein/learner_registry.h"
#include "bernstein/rng.h"
#include "bernstein/synopsis_io.h"

namespace py = pybind11;
using namespace bernstein;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Dataset ToDataset(const Array& features, const std::optional<Array>& labels,
                  const std::string& label_kind) {
  if (features.ndim() != 2) throw ShapeError("features must be a 2-d array");
  const auto n = static_cast<std::size_t>(features.shape(0));
  const int ell = static_cast<int>(features.shape(1));
  const LabelKind kind = ParseLabelKind(label_kind);
  if ((kind == LabelKind::kNone) != !labels.has_value()) {
    throw ConfigError("labels must be given exactly when label_kind is not 'none'");
  }
  if (labels && (labels->ndim() != 1 ||
                 static_cast<std::size_t>(labels->shape(0)) != n)) {
    throw ShapeError("labels must be a 1-d array with one entry per record");
  }
  Dataset data(ell, kind);
  const double* f = features.data();
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<double> label;
    if (labels) label = labels->data()[i];
    data.Add(std::span<const double>(f + i * ell, ell), label);
  }
  return data;
}

// Points as an (m, ell) array.
template <typename Fn>
py::array_t<double> MapPoints(const Array& points, int ell, Fn&& fn) {
  if (points.ndim() != 2 || points.shape(1) != ell) {
    throw ShapeError("points must be an (m, " + std::to_string(ell) + ") array");
  }
  const auto m = points.shape(0);
  py::array_t<double> out(m);
  auto o = out.mutable_unchecked<1>();
  for (py::ssize_t i = 0; i < m; ++i) {
    o(i) = fn(std::span<const double>(points.data() + i * ell, ell));
  }
  return out;
}

// A synopsis with its interpolation table built once.
class PySynopsis {
 public:
  explicit PySynopsis(Synopsis s)
      : synopsis_(std::move(s)), table_(BasisTable::Build(synopsis_.params)) {}

  py::array_t<double> Evaluate(const Array& points) const {
    return MapPoints(points, synopsis_.params.ell, [&](std::span<const double> y) {
      return EvaluateSynopsis(synopsis_, table_, y);
    });
  }
  py::array_t<double> Baseline(const Array& points) const {
    return MapPoints(points, synopsis_.params.ell, [&](std::span<const double> y) {
      return BaselineEvaluate(synopsis_, y);
    });
  }
  const Synopsis& get() const { return synopsis_; }

 private:
  Synopsis synopsis_;
  BasisTable table_;
};

}  // namespace

PYBIND11_MODULE(_bernstein, m) {
  m.doc() = "Differentially private function release with Bernstein bases";

  static py::exception<Error> base(m, "BernsteinError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<CapacityError>(m, "CapacityError", base);
  py::register_exception<ShapeError>(m, "ShapeError", base);
  py::register_exception<BudgetError>(m, "BudgetError", base);
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", base);
  py::register_exception<ConfigError>(m, "ConfigError", base);
  py::register_exception<ConstructionError>(m, "ConstructionError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);
  py::register_exception<EvaluationError>(m, "EvaluationError", base);
  py::register_exception<TrainingError>(m, "TrainingError", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  m.def("bernstein_basis", &BernsteinBasis, py::arg("nu"), py::arg("k"), py::arg("y"));
  m.def(
      "iterated_basis_vector",
      [](int k, int h, double y) {
        return IteratedBasisVector(BasisTable::Build({k, h, 1}), y);
      },
      py::arg("k"), py::arg("h"), py::arg("y"));
  m.def(
      "approximate",
      [](const py::function& f, int k, int h, int ell, const Array& points) {
        const BasisParams params{k, h, ell};
        const PointFunction pf = [&f](std::span<const double> y) {
          return f(std::vector<double>(y.begin(), y.end())).cast<double>();
        };
        const CoefficientField field = Approximate(pf, params);
        const BasisTable table = BasisTable::Build(params);
        return MapPoints(points, ell, [&](std::span<const double> y) {
          return EvaluateTensor(field, table, y);
        });
      },
      py::arg("f"), py::arg("k"), py::arg("h"), py::arg("ell"), py::arg("points"),
      "Noise-free iterated Bernstein approximation of f evaluated at points.");

  m.def("laplace_scale", &LaplaceScale, py::arg("sensitivity"), py::arg("k"),
        py::arg("ell"), py::arg("epsilon"));
  m.def("laplace_scale_approx", &LaplaceScaleApprox, py::arg("sensitivity"),
        py::arg("k"), py::arg("ell"), py::arg("epsilon"), py::arg("delta"));

  py::class_<TargetFunction>(m, "Target")
      .def_readonly("name", &TargetFunction::name)
      .def_readonly("ell", &TargetFunction::ell)
      .def_readonly("n", &TargetFunction::n)
      .def_readonly("sensitivity", &TargetFunction::sensitivity)
      .def_property_readonly("smoothness",
                             [](const TargetFunction& t) {
                               return SmoothnessName(t.smoothness);
                             })
      .def(
          "evaluate",
          [](const TargetFunction& t, const Array& features,
             const std::optional<Array>& labels, const std::string& label_kind,
             const Array& points) {
            const PointFunction f = t.Bind(ToDataset(features, labels, label_kind));
            return MapPoints(points, t.ell, f);
          },
          py::arg("features"), py::arg("labels"), py::arg("label_kind"),
          py::arg("points"))
      .def("choose_k", &ChooseK, py::arg("epsilon"), py::arg("beta"), py::arg("h"))
      .def("predicted_error_bound", &PredictedErrorBound, py::arg("epsilon"),
           py::arg("beta"), py::arg("h"));

  m.def(
      "_make_target",
      [](const std::string& learner, int ell, std::size_t n) {
        return MakeTarget(nlohmann::json::parse(learner), ell, n);
      },
      py::arg("learner_json"), py::arg("ell"), py::arg("n"));

  py::class_<PySynopsis>(m, "Synopsis")
      .def("evaluate", &PySynopsis::Evaluate, py::arg("points"))
      .def("baseline", &PySynopsis::Baseline, py::arg("points"))
      .def_property_readonly("k", [](const PySynopsis& s) { return s.get().params.k; })
      .def_property_readonly("h", [](const PySynopsis& s) { return s.get().params.h; })
      .def_property_readonly("ell", [](const PySynopsis& s) { return s.get().params.ell; })
      .def_property_readonly("lam", [](const PySynopsis& s) { return s.get().lambda; })
      .def_property_readonly("sensitivity",
                             [](const PySynopsis& s) { return s.get().sensitivity; })
      .def_property_readonly("seed", [](const PySynopsis& s) { return s.get().rng_seed; })
      .def_property_readonly("values",
                             [](const PySynopsis& s) {
                               const auto v = s.get().noisy_values.values();
                               return std::vector<double>(v.begin(), v.end());
                             })
      .def("to_json", [](const PySynopsis& s) { return SerializeSynopsis(s.get()); })
      .def_static("from_json", [](const std::string& text) {
        return PySynopsis(ParseSynopsis(text));
      });

  m.def(
      "sanitize",
      [](const TargetFunction& target, const Array& features,
         const std::optional<Array>& labels, const std::string& label_kind,
         double epsilon, double delta, int h, int k, std::uint64_t seed) {
        const Dataset data = ToDataset(features, labels, label_kind);
        return PySynopsis(
            Sanitize(target, data, {k, h, target.ell}, {epsilon, delta}, seed));
      },
      py::arg("target"), py::arg("features"), py::arg("labels"),
      py::arg("label_kind"), py::arg("epsilon"), py::arg("delta"), py::arg("h"),
      py::arg("k"), py::arg("seed"));

  m.def(
      "_run_experiment",
      [](const std::string& spec_json) {
        return ReportToCsv(RunUtilityExperiment(ParseExperimentSpec(spec_json)));
      },
      py::arg("spec_json"), "Runs an experiment spec and returns the CSV report.");

  m.def(
      "concentration_tail_check",
      [](int k, int h, int ell, double lambda, int trials,
         const std::vector<double>& taus, std::uint64_t seed) {
        std::vector<py::dict> rows;
        for (const TailRow& r :
             ConcentrationTailCheck(k, h, ell, lambda, trials, taus, seed)) {
          py::dict d;
          d["tau"] = r.tau;
          d["tail"] = r.tail;
          d["bound"] = r.bound;
          d["standard_error"] = r.standard_error;
          d["flagged"] = r.flagged;
          rows.push_back(d);
        }
        return rows;
      },
      py::arg("k"), py::arg("h"), py::arg("ell"), py::arg("lam"),
      py::arg("trials"), py::arg("taus"), py::arg("seed"));

  m.def(
      "build_lower_bound_witness",
      [](int V, double epsilon, double eta, int ell) {
        const LowerBoundWitness w = BuildLowerBoundWitness(V, epsilon, eta, ell);
        py::dict d;
        d["c"] = w.c;
        d["n"] = w.n;
        d["N"] = w.N;
        d["sensitivity"] = w.Sensitivity();
        d["databases"] = w.databases;
        return d;
      },
      py::arg("V"), py::arg("epsilon"), py::arg("eta"), py::arg("ell") = 1);

  m.def(
      "generate_mixture_data",
      [](std::size_t n, const std::vector<std::tuple<double, double, double>>& comps,
         std::uint64_t seed, int ell) {
        std::vector<MixtureComponent> c;
        for (const auto& [mean, var, w] : comps) c.push_back({mean, var, w});
        const Dataset d = GenerateMixtureData(n, c, seed, ell);
        py::array_t<double> out({static_cast<py::ssize_t>(d.size()),
                                 static_cast<py::ssize_t>(ell)});
        auto o = out.mutable_unchecked<2>();
        for (std::size_t i = 0; i < d.size(); ++i) {
          for (int a = 0; a < ell; ++a) o(i, a) = d.point(i)[a];
        }
        return out;
      },
      py::arg("n"), py::arg("components"), py::arg("seed"), py::arg("ell") = 1,
      "Components are (mean, variance, weight) triples.");
}

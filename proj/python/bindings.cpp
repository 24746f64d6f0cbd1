// Copyright 2026 The conncover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "conncover/budgeted_csc.hpp"
#include "conncover/comm_graph.hpp"
#include "conncover/grid.hpp"
#include "conncover/instance.hpp"
#include "conncover/min_csc.hpp"
#include "conncover/oracle.hpp"
#include "conncover/report_json.hpp"
#include "conncover/verify.hpp"

namespace py = pybind11;
using namespace conncover;

namespace {

std::vector<Point> to_points(const std::vector<std::pair<double, double>>& xy) {
  std::vector<Point> out;
  out.reserve(xy.size());
  for (const auto& [x, y] : xy) out.push_back({x, y});
  return out;
}

std::vector<std::pair<double, double>> from_points(const std::vector<Point>& pts) {
  std::vector<std::pair<double, double>> out;
  out.reserve(pts.size());
  for (const Point& p : pts) out.emplace_back(p.x, p.y);
  return out;
}

QstMode qst_mode(const std::string& name) {
  const auto mode = parse_qst_mode(name);
  if (!mode) throw py::value_error("qst must be 'exact', 'heuristic' or 'auto'");
  return *mode;
}

py::dict oracle_dict(const oracle::Result& r) {
  py::dict d;
  d["feasible"] = r.feasible;
  d["value"] = r.value;
  d["witness"] = r.witness;
  d["edges"] = r.edges;
  d["explored"] = r.explored;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Connected sensor cover solvers";

  py::register_exception<oracle::GuardExceeded>(m, "GuardExceeded", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def(py::init([](const std::vector<std::pair<double, double>>& sensors,
                       const std::vector<std::pair<double, double>>& targets, double rc, double rs) {
             return Instance(to_points(sensors), to_points(targets), rc, rs);
           }),
           py::arg("sensors"), py::arg("targets"), py::arg("rc"), py::arg("rs"))
      .def_property_readonly("sensors", [](const Instance& i) { return from_points(i.sensors()); })
      .def_property_readonly("targets", [](const Instance& i) { return from_points(i.targets()); })
      .def_property_readonly("rc", &Instance::rc)
      .def_property_readonly("rs", &Instance::rs)
      .def_property_readonly("ratio", &Instance::ratio)
      .def("covers", &Instance::covers)
      .def("communicates", &Instance::communicates)
      .def("to_json", [](const Instance& i) { return to_json(i); })
      .def_static("from_json", &instance_from_json)
      .def_static("load", &load_instance)
      .def("save", [](const Instance& i, const std::string& path) { save_instance(i, path); })
      .def("__len__", &Instance::num_sensors)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& i) {
        return "<Instance n=" + std::to_string(i.num_sensors()) + " m=" + std::to_string(i.num_targets()) + ">";
      });

  m.def("generate", &generate, py::arg("n"), py::arg("m"), py::arg("rc") = 1.0, py::arg("rs") = 1.0,
        py::arg("extent") = 5.0, py::arg("seed") = 0);
  m.def("normalize", &normalize);
  m.def("group_modulus", &group_modulus, py::arg("ratio"));

  m.def("comm_edges", [](const Instance& inst) { return build_comm_graph(inst).edges; });
  m.def("components", [](const Instance& inst) { return components(build_comm_graph(inst)); });

  m.def(
      "solve_min_csc",
      [](const Instance& inst, bool all_roots) {
        MinCscOptions options;
        options.roots = all_roots ? RootStrategy::kAll : RootStrategy::kHeuristic;
        const MinCscResult result = solve_min_csc(normalize(inst), options);
        py::dict d;
        d["feasible"] = result.feasible;
        d["sensors"] = result.solution.ids();
        d["report"] = min_csc_report(result, options);
        return d;
      },
      py::arg("instance"), py::arg("all_roots") = false);

  m.def(
      "solve_budgeted",
      [](const Instance& inst, std::size_t budget, const std::string& qst) {
        BudgetedOptions options;
        options.qst = qst_mode(qst);
        const BudgetedResult result = solve_budgeted(normalize(inst), budget, options);
        py::dict d;
        d["sensors"] = result.sensors.ids();
        d["tree_edges"] = result.tree_edges;
        d["profit"] = result.profit;
        d["report"] = budgeted_report(result, options.qst);
        return d;
      },
      py::arg("instance"), py::arg("budget"), py::arg("qst") = "auto");

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("feasible", &Verdict::feasible)
      .def_readonly("reason", &Verdict::reason)
      .def_readonly("uncovered", &Verdict::uncovered)
      .def_readonly("covered", &Verdict::covered)
      .def("__bool__", [](const Verdict& v) { return v.feasible; });

  m.def("verify_min_csc", [](const Instance& inst, const std::vector<SensorId>& sensors) {
    return verify_min_csc(inst, SensorSet(sensors));
  });
  m.def(
      "verify_budgeted",
      [](const Instance& inst, const std::vector<SensorId>& sensors, std::size_t budget,
         const std::vector<std::pair<SensorId, SensorId>>& tree_edges) {
        return verify_budgeted(inst, SensorSet(sensors), budget, tree_edges);
      },
      py::arg("instance"), py::arg("sensors"), py::arg("budget"), py::arg("tree_edges") = std::vector<std::pair<SensorId, SensorId>>{});

  m.def("exact_min_csc", [](const Instance& inst) { return oracle_dict(oracle::exact_min_csc(inst)); });
  m.def("exact_budgeted",
        [](const Instance& inst, std::size_t budget) { return oracle_dict(oracle::exact_budgeted(inst, budget)); });
}

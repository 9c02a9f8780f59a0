/* Copyright 2026 The ringcdc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ringcdc/allgather.hpp"
#include "ringcdc/alltoall.hpp"
#include "ringcdc/baselines.hpp"
#include "ringcdc/driver.hpp"
#include "ringcdc/goldens.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<int>> placement_lists(const ringcdc::Placement& p) {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= p.n(); ++i) out.push_back(p.files(i));
  return out;
}

py::dict run(const std::string& problem, int n, int r, int d, const std::string& placement,
             const std::string& scheme, bool check_oracle, std::size_t payload_bytes,
             std::uint64_t seed) {
  ringcdc::RunConfig c;
  c.problem = ringcdc::parse_flavor(problem);
  c.n = n;
  c.r = r;
  c.d = d;
  c.placement = ringcdc::parse_placement(placement);
  c.scheme = ringcdc::parse_scheme(scheme);
  c.check_oracle = check_oracle;
  c.options.packets.payload_bytes = payload_bytes;
  c.options.packets.seed = seed;
  ringcdc::RunOutcome o;
  {
    py::gil_scoped_release release;
    o = ringcdc::run_config(c);
  }
  py::dict out = py::module_::import("json").attr("loads")(ringcdc::report_json(o).dump());
  out["ledger_csv"] = ringcdc::ledger_csv(o.result.ledger);
  return out;
}

py::dict bounds(const std::string& problem, int n, int r, int d, const std::string& placement) {
  return py::module_::import("json").attr("loads")(
      ringcdc::bounds_json(ringcdc::parse_flavor(problem), n, r, d,
                           ringcdc::parse_placement(placement))
          .dump());
}

std::string sweep(const std::string& problem, const std::vector<int>& ns,
                  const std::vector<int>& ds, int r_min, int r_max, const std::string& placement,
                  bool check_oracle, unsigned threads) {
  ringcdc::SweepSpec spec;
  spec.problem = ringcdc::parse_flavor(problem);
  spec.ns = ns;
  spec.ds = ds;
  spec.r_min = r_min;
  spec.r_max = r_max;
  spec.placement = ringcdc::parse_placement(placement);
  spec.check_oracle = check_oracle;
  spec.threads = threads;
  py::gil_scoped_release release;
  return ringcdc::sweep_csv(ringcdc::run_sweep(spec));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simulator for coded all-gather and all-to-all on ring networks";

  py::register_exception<ringcdc::InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
  py::register_exception<ringcdc::SimulationError>(m, "SimulationError", PyExc_RuntimeError);

  m.def("ring_distance",
        [](int a, int b, int n, int d) { return ringcdc::RingTopology(n, d).distance(a, b); },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("d") = 1);
  m.def("neighbors", [](int i, int n, int d) { return ringcdc::RingTopology(n, d).neighbors(i); },
        py::arg("i"), py::arg("n"), py::arg("d"));
  m.def("cyclic_placement",
        [](int n, int r) { return placement_lists(ringcdc::cyclic_placement(n, r)); },
        py::arg("n"), py::arg("r"));
  m.def("appendix_c_placement",
        [](int n, int r) { return placement_lists(ringcdc::appendix_c_placement(n, r)); },
        py::arg("n"), py::arg("r"));

  m.def("allgather_ncl_formula",
        [](int n, int r, int d) { return ringcdc::to_string(ringcdc::allgather_ncl_formula(n, r, d)); },
        py::arg("n"), py::arg("r"), py::arg("d"));
  m.def("allgather_lower_bound",
        [](int n, int r, int d) { return ringcdc::to_string(ringcdc::allgather_lower_bound(n, r, d)); },
        py::arg("n"), py::arg("r"), py::arg("d"));
  m.def("memory_sharing_envelope",
        [](int n, int d, const std::string& r_real) {
          return ringcdc::to_string(
              ringcdc::memory_sharing_envelope(n, d, ringcdc::parse_rational(r_real)));
        },
        py::arg("n"), py::arg("d"), py::arg("r_real"));
  m.def("coding_gain",
        [](const std::string& problem, int n, int r, int d) -> py::object {
          auto g = ringcdc::coding_gain(ringcdc::parse_flavor(problem), n, r, d);
          if (!g) return py::none();
          return py::str(ringcdc::to_string(*g));
        },
        py::arg("problem"), py::arg("n"), py::arg("r"), py::arg("d"));

  m.def("run", &run, py::arg("problem"), py::arg("n"), py::arg("r"), py::arg("d"),
        py::arg("placement") = "cyclic", py::arg("scheme") = "coded",
        py::arg("check_oracle") = true, py::arg("payload_bytes") = 64, py::arg("seed") = 0);
  m.def("bounds", &bounds, py::arg("problem"), py::arg("n"), py::arg("r"), py::arg("d"),
        py::arg("placement") = "cyclic");
  m.def("sweep", &sweep, py::arg("problem"), py::arg("ns"), py::arg("ds"), py::arg("r_min") = 1,
        py::arg("r_max") = 0, py::arg("placement") = "cyclic", py::arg("check_oracle") = true,
        py::arg("threads") = 0);
  m.def("check_goldens", [] {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& diff : ringcdc::check_goldens()) out.emplace_back(diff.name, diff.match);
    return out;
  });
}

// Copyright 2026 The su2pol Authors
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

// Python bindings. States cross the boundary as numpy complex arrays.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "su2pol/bases.hpp"
#include "su2pol/errors.hpp"
#include "su2pol/orbits.hpp"
#include "su2pol/polarization.hpp"
#include "su2pol/state_io.hpp"
#include "su2pol/su2.hpp"
#include "su2pol/verify.hpp"

namespace py = pybind11;
using namespace su2pol;

namespace {

py::tuple angles_tuple(const EulerAngles& a) { return py::make_tuple(a.beta, a.theta, a.alpha); }

EulerAngles angles_from(double beta, double theta, double alpha) { return {beta, theta, alpha}; }

OptimizerOptions options_from(std::array<int, 3> grid, int starts, double tol, int iters) {
  OptimizerOptions o;
  o.grid_counts = grid;
  o.refine_starts = starts;
  o.refine_tolerance = tol;
  o.max_iterations = iters;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Degree of quantum polarization and SU(2) tools for two-mode states";

  py::register_exception<Error>(m, "Su2polError", PyExc_ValueError);

  py::class_<PureState>(m, "PureState")
      .def(py::init<>())
      .def_property_readonly("n_photons", &PureState::n_photons)
      .def_property_readonly("amplitudes",
                             [](const PureState& s) { return ComplexVector(s.amplitudes()); })
      .def("__repr__", [](const PureState& s) {
        return "PureState(n_photons=" + std::to_string(s.n_photons()) + ")";
      });

  m.def(
      "make_state",
      [](int n, const ComplexVector& amps, bool normalize) { return make_state(n, amps, normalize); },
      py::arg("n_photons"), py::arg("amplitudes"), py::arg("normalize") = false);
  m.def("fock_state", &fock_state, py::arg("n_photons"), py::arg("n"));
  m.def("inner_product", &inner_product);
  m.def("fidelity", &fidelity);
  m.def("psi_orbit_state", &psi_orbit_state, py::arg("vartheta"));
  m.def("parse_state", &parse_state);
  m.def("state_to_json", [](const PureState& s) { return state_to_json(s).dump(); });

  m.def(
      "euler_unitary",
      [](int n, double beta, double theta, double alpha) {
        return ComplexMatrix(euler_unitary(n, angles_from(beta, theta, alpha)).entries());
      },
      py::arg("n_photons"), py::arg("beta"), py::arg("theta"), py::arg("alpha"));
  m.def(
      "transform",
      [](const PureState& s, double beta, double theta, double alpha) {
        return apply_unitary(euler_unitary(s.n_photons(), angles_from(beta, theta, alpha)), s);
      },
      py::arg("state"), py::arg("beta"), py::arg("theta"), py::arg("alpha"));
  m.def("rotation_matrix", &rotation_matrix, py::arg("n_photons"), py::arg("theta"));
  m.def("legendre", &legendre, py::arg("m"), py::arg("x"));
  m.def("legendre_zeros", &legendre_zeros, py::arg("m"));

  const std::array<int, 3> default_grid = OptimizerOptions{}.grid_counts;
  m.def(
      "degree_of_polarization",
      [](const PureState& s, std::array<int, 3> grid, int starts, double tol, int iters) {
        const PolarizationResult r = degree_of_polarization(s, options_from(grid, starts, tol, iters));
        py::dict out;
        out["eta_q"] = r.eta_q;
        out["min_overlap_mag"] = r.min_overlap_mag;
        out["argmin"] = angles_tuple(r.argmin);
        out["transformed_state"] = r.transformed_state;
        return out;
      },
      py::arg("state"), py::arg("grid") = default_grid, py::arg("starts") = 8,
      py::arg("tol") = 1e-10, py::arg("max_iters") = 500);
  m.def("orthogonalize", [](const PureState& s) {
    const OrthogonalizeOutcome o = orthogonalize(s);
    py::dict out;
    out["found"] = o.found;
    out["route"] = std::string(route_name(o.route));
    out["residual"] = o.result.min_overlap_mag;
    out["angles"] = angles_tuple(o.result.argmin);
    out["transformed_state"] = o.result.transformed_state;
    return out;
  });
  m.def("classify_orbit", [](const PureState& s) {
    const OrbitClass c = classify_orbit(s);
    py::dict out;
    out["kind"] = std::string(orbit_kind_name(c.kind));
    out["label"] = c.label ? py::object(py::int_(*c.label)) : py::object(py::none());
    out["witness_label"] = c.witness_label;
    out["witness_fidelity"] = c.witness_fidelity;
    out["witness_angles"] = angles_tuple(c.witness_angles);
    return out;
  });
  m.def(
      "basis",
      [](int n, const std::string& axis, const std::string& seed) {
        const Axis ax = parse_axis(axis);
        OrthonormalBasis b;
        if (n == 2) {
          b = ax == Axis::kZ ? two_photon_phase_basis() : two_photon_rotation_basis();
        } else if (n == 3) {
          b = three_photon_basis(parse_seed(seed), ax);
        } else {
          throw Error(ErrorCode::kInvalidArgument, "bases are available for N=2 and N=3");
        }
        return b.states;
      },
      py::arg("n_photons"), py::arg("axis") = "z", py::arg("seed") = "zeta1");
  m.def("is_equipartition",
        [](const PureState& s, const std::string& axis) { return is_equipartition(s, parse_axis(axis)); });
  m.def("verify", [] {
    py::list rows;
    for (const CheckResult& r : run_identity_suite()) {
      py::dict row;
      row["id"] = r.id;
      row["name"] = r.name;
      row["passed"] = r.passed;
      row["worst"] = r.worst;
      row["tolerance"] = r.tolerance;
      rows.append(row);
    }
    return rows;
  });
}

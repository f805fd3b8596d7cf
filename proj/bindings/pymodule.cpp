// Python bindings for the nhchain core: model assembly, dense oracle,
// topology, skin-mode machinery, Green's functions and phase classification.
#include "nhchain/dense.hpp"
#include "nhchain/greens.hpp"
#include "nhchain/model.hpp"
#include "nhchain/phase.hpp"
#include "nhchain/skin.hpp"
#include "nhchain/winding.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace nhchain;

PYBIND11_MODULE(_nhchain, m) {
  m.doc() = "non-reciprocal two-band chain: spectra, topology, skin modes";

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double t0, double t1R, double t1L, double t2, double eps0, int N) {
             return ModelParams{t0, t1R, t1L, t2, eps0, N};
           }),
           py::arg("t0") = 1.0, py::arg("t1R") = 1.0, py::arg("t1L") = 1.0,
           py::arg("t2") = 0.0, py::arg("eps0") = 0.0, py::arg("N") = 3)
      .def_readwrite("t0", &ModelParams::t0)
      .def_readwrite("t1R", &ModelParams::t1R)
      .def_readwrite("t1L", &ModelParams::t1L)
      .def_readwrite("t2", &ModelParams::t2)
      .def_readwrite("eps0", &ModelParams::eps0)
      .def_readwrite("N", &ModelParams::N)
      .def("__repr__", [](const ModelParams& p) {
        return "ModelParams(t0=" + std::to_string(p.t0) + ", t1R=" + std::to_string(p.t1R) +
               ", t1L=" + std::to_string(p.t1L) + ", t2=" + std::to_string(p.t2) +
               ", eps0=" + std::to_string(p.eps0) + ", N=" + std::to_string(p.N) + ")";
      });

  m.def("build_obc_hamiltonian", &build_obc_hamiltonian, py::arg("params"));
  m.def("build_ring_hamiltonian", &build_ring_hamiltonian, py::arg("params"));
  m.def("eigvals", &eigvals, py::arg("matrix"));
  m.def(
      "eig",
      [](const Matrix& M) {
        const EigenDecomposition d = eig(M);
        return py::make_tuple(d.eigenvalues, d.right_eigenvectors, d.max_residual, d.defective);
      },
      py::arg("matrix"),
      "returns (eigenvalues, right_eigenvectors, max_residual, defective)");

  m.def(
      "offdiag_roots",
      [](const ModelParams& p) {
        const auto [za, zb] = offdiag_roots(p);
        return py::make_tuple(std::vector<cplx>{za[0], za[1]}, std::vector<cplx>{zb[0], zb[1]});
      },
      py::arg("params"));
  m.def("criterion_margin", &criterion_margin, py::arg("params"));
  m.def(
      "is_topological",
      [](const ModelParams& p) { return topological_criterion(p).topological; },
      py::arg("params"));
  m.def("find_topological_transition", &find_topological_transition, py::arg("params"),
        py::arg("sweep"), py::arg("lo"), py::arg("hi"));

  m.def("alpha_from_theta", &alpha_from_theta, py::arg("params"), py::arg("theta"));
  m.def(
      "localization_profile",
      [](const ModelParams& p, int samples) {
        const LocalizationProfile prof = localization_profile(p, samples);
        return py::make_tuple(prof.theta, prof.alpha, prof.max_abs_alpha);
      },
      py::arg("params"), py::arg("samples") = 512,
      "returns (theta, alpha, max_abs_alpha); alpha is NaN where unsolvable");
  m.def(
      "quantize",
      [](const ModelParams& p) {
        const QuantizeReport rep = quantize(p);
        py::list modes;
        for (const SkinMode& mo : rep.modes) {
          py::dict d;
          d["m"] = mo.m;
          d["theta"] = mo.theta;
          d["alpha"] = mo.alpha;
          d["energy"] = mo.energy;
          d["penetration_length"] = mo.penetration_length;
          d["hyperbolic"] = mo.hyperbolic;
          d["state_residual"] = mo.state_residual;
          modes.append(d);
        }
        return py::make_tuple(modes, rep.expected_count, rep.found_count, rep.diagnostics);
      },
      py::arg("params"), "returns (modes, expected_count, found_count, diagnostics)");
  m.def(
      "exact_eigenstate",
      [](const ModelParams& p, cplx E) { return exact_eigenstate(p, p.N, E); },
      py::arg("params"), py::arg("energy"));

  m.def("spectral_functions", &spectral_functions, py::arg("params"), py::arg("energy"),
        py::arg("eta"), "returns (A_surface, A_bulk) at E + i eta");

  m.def(
      "classify",
      [](const ModelParams& p) {
        const PhasePoint pt = classify(p);
        py::dict d;
        d["phase"] = phase_name(pt.phase);
        d["topological"] = pt.topological;
        d["skin"] = pt.skin;
        d["skin_side"] = skin_side_name(pt.skin_side);
        d["max_abs_alpha"] = pt.max_abs_alpha;
        d["flag"] = pt.flag;
        return d;
      },
      py::arg("params"));
  m.def("count_eigs_in_disk", &count_eigs_in_disk, py::arg("params"), py::arg("center"),
        py::arg("radius"));
  m.def(
      "finite_size_report",
      [](const ModelParams& p, const std::vector<int>& sizes) {
        py::list rows;
        for (const FiniteSizeRow& r : finite_size_report(p, sizes)) {
          py::dict d;
          d["N"] = r.N;
          d["transition"] = r.transition ? py::object(py::float_(*r.transition)) : py::none();
          d["analytic"] = r.analytic;
          d["drift"] = r.drift;
          rows.append(d);
        }
        return rows;
      },
      py::arg("params"), py::arg("sizes"));
}

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unpol/analysis.hpp"
#include "unpol/state_file.hpp"
#include "unpol/version.hpp"

namespace py = pybind11;
using namespace unpol;

namespace {

int manifold_of(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("block must be a nonempty square matrix");
  }
  return static_cast<int>(m.rows()) - 1;
}

DirectSumOperator direct_sum_from(const std::vector<Matrix>& blocks) {
  std::vector<BlockOperator> ops;
  ops.reserve(blocks.size());
  for (std::size_t n = 0; n < blocks.size(); ++n) {
    ops.emplace_back(static_cast<int>(n), blocks[n]);
  }
  return DirectSumOperator(std::move(ops));
}

std::vector<Matrix> matrices_of(const DirectSumOperator& op) {
  std::vector<Matrix> out;
  out.reserve(op.blocks().size());
  for (const auto& b : op.blocks()) out.push_back(b.matrix());
  return out;
}

Generator generator_arg(int k) { return generator_from_index(k); }

TransformFamily family_arg(const std::string& name) {
  if (name == "linear") return TransformFamily::Linear;
  if (name == "general") return TransformFamily::General;
  throw std::invalid_argument("family must be 'linear' or 'general'");
}

py::array_t<Complex> moment_array(const MomentTensor& t) {
  std::vector<py::ssize_t> shape(static_cast<std::size_t>(t.order()), 3);
  py::array_t<Complex> arr(shape);
  std::copy(t.entries().begin(), t.entries().end(), arr.mutable_data());
  return arr;
}

}  // namespace

PYBIND11_MODULE(_unpol, m) {
  m.doc() = "Two-mode SU(2) polarization algebra and unpolarized-light checks";
  m.attr("__version__") = kVersion;
  m.attr("STOKES_FACTOR") = kStokesFactor;
  m.attr("DEFAULT_TOLERANCE") = kDefaultTolerance;

  // Fock basis
  m.def("manifold_dimension", &manifold_dimension, py::arg("n"));
  m.def("truncated_dimension", &truncated_dimension, py::arg("n_max"));
  m.def(
      "basis_offset",
      [](int n_a, int n_b) {
        const BasisPosition p = basis_offset({n_a, n_b});
        return py::make_tuple(p.manifold, p.offset);
      },
      py::arg("n_a"), py::arg("n_b"));
  m.def(
      "flat_index", [](int n_a, int n_b) { return flat_index({n_a, n_b}); },
      py::arg("n_a"), py::arg("n_b"));

  // Schwinger operators
  m.def(
      "schwinger_block", [](int k, int n) { return schwinger_block(generator_arg(k), n).matrix(); },
      py::arg("k"), py::arg("n"), "L_k restricted to manifold n (basis |0,n>, ..., |n,0>).");
  m.def(
      "stokes_block", [](int k, int n) { return stokes_block(generator_arg(k), n).matrix(); },
      py::arg("k"), py::arg("n"));
  m.def(
      "photon_number_block", [](int n) { return photon_number_block(n).matrix(); }, py::arg("n"));
  m.def(
      "casimir_block", [](int n) { return casimir_block(n).matrix(); }, py::arg("n"));
  m.def(
      "commutator",
      [](const Matrix& a, const Matrix& b) {
        return commutator(BlockOperator(manifold_of(a), a), BlockOperator(manifold_of(b), b))
            .matrix();
      },
      py::arg("a"), py::arg("b"));

  // Transforms
  py::class_<LosslessUnitary>(m, "LosslessUnitary")
      .def(py::init([](const std::vector<Matrix>& blocks) {
             return LosslessUnitary(direct_sum_from(blocks));
           }),
           py::arg("blocks"))
      .def_property_readonly("n_max", &LosslessUnitary::n_max)
      .def_property_readonly("blocks", [](const LosslessUnitary& u) { return matrices_of(u.op()); })
      .def("block", [](const LosslessUnitary& u, int n) { return u.block(n).matrix(); });

  m.def(
      "evolution_block",
      [](double p1, double p2, double p3, int n) { return evolution_block({p1, p2, p3}, n).matrix(); },
      py::arg("phi_1"), py::arg("phi_2"), py::arg("phi_3"), py::arg("n"));
  m.def(
      "evolution",
      [](double p1, double p2, double p3, int n_max) { return evolution({p1, p2, p3}, n_max); },
      py::arg("phi_1"), py::arg("phi_2"), py::arg("phi_3"), py::arg("n_max"));
  m.def("differential_phase", &differential_phase, py::arg("theta"), py::arg("n_max"));
  m.def("geometric_rotation", &geometric_rotation, py::arg("theta"), py::arg("n_max"));
  m.def("haar_random_su2", &haar_random_su2, py::arg("seed"), py::arg("n_max"));
  m.def("random_lossless", &random_lossless, py::arg("seed"), py::arg("n_max"));

  // States
  py::class_<DensityOperator>(m, "DensityOperator")
      .def(py::init([](const std::vector<Matrix>& blocks, double deficit) {
             return DensityOperator(direct_sum_from(blocks), deficit);
           }),
           py::arg("blocks"), py::arg("truncation_deficit") = 0.0)
      .def_property_readonly("n_max", &DensityOperator::n_max)
      .def_property_readonly("truncation_deficit", &DensityOperator::truncation_deficit)
      .def_property_readonly("blocks", [](const DensityOperator& r) { return matrices_of(r.op()); })
      .def("block", [](const DensityOperator& r, int n) { return r.block(n).matrix(); })
      .def("trace", &DensityOperator::trace)
      .def("manifold_probability", &DensityOperator::manifold_probability)
      .def("to_json", [](const DensityOperator& r, const std::string& label) {
             return serialize_state(r, label);
           },
           py::arg("label") = "")
      .def_static("from_json", [](const std::string& text) { return parse_state(text).rho; });

  m.def(
      "unpolarized_state",
      [](std::vector<double> weights) { return unpolarized_state(ManifoldWeights(std::move(weights))); },
      py::arg("weights"), "Block-scalar state with r_n * I on manifold n.");
  m.def("thermal_state", &thermal_state, py::arg("mean_photons"), py::arg("n_max"));
  m.def("thermal_truncation_deficit", &thermal_truncation_deficit, py::arg("mean_photons"),
        py::arg("n_max"));
  m.def("renormalized", &renormalized, py::arg("rho"));
  m.def(
      "pure_density",
      [](const Vector& amplitudes) {
        PureDensity pd = pure_density(PureStateVector(amplitudes));
        return py::make_tuple(pd.rho, pd.coherences_discarded);
      },
      py::arg("amplitudes"),
      "Returns (rho, coherences_discarded) for amplitudes in flat basis order.");
  m.def(
      "number_state",
      [](int n_a, int n_b, int n_max) {
        return pure_density(PureStateVector::number_state({n_a, n_b}, n_max)).rho;
      },
      py::arg("n_a"), py::arg("n_b"), py::arg("n_max"));
  m.def(
      "validate",
      [](const DensityOperator& rho) {
        const DensityDiagnostics d = validate(rho);
        py::dict out;
        out["hermiticity_residual"] = d.hermiticity_residual;
        out["min_eigenvalue"] = d.min_eigenvalue;
        out["trace_residual"] = d.trace_residual;
        out["passed"] = d.passed();
        return out;
      },
      py::arg("rho"));

  // Analysis
  py::class_<UnpolarizationReport>(m, "UnpolarizationReport")
      .def_readonly("tolerance", &UnpolarizationReport::tolerance)
      .def_readonly("commutator_norms", &UnpolarizationReport::commutator_norms)
      .def_readonly("block_scalar_residuals", &UnpolarizationReport::block_scalar_residuals)
      .def_readonly("block_scalar_verdict", &UnpolarizationReport::block_scalar_verdict)
      .def_readonly("commutator_verdict", &UnpolarizationReport::commutator_verdict)
      .def_readonly("verdict", &UnpolarizationReport::verdict)
      .def("__bool__", [](const UnpolarizationReport& r) { return r.verdict; });

  m.def("commutator_norms", &commutator_norms, py::arg("rho"));
  m.def("is_unpolarized", &is_unpolarized, py::arg("rho"), py::arg("tol") = kDefaultTolerance);
  m.def("commutant_dimension", &commutant_dimension, py::arg("n"));
  m.def("invariance_deviation", &invariance_deviation, py::arg("rho"), py::arg("unitary"));
  m.def("transformed", &transformed, py::arg("rho"), py::arg("unitary"));
  m.def(
      "monte_carlo_invariance",
      [](const DensityOperator& rho, int trials, RandomSeed seed, const std::string& family) {
        return monte_carlo_invariance(rho, trials, seed, family_arg(family)).max_deviation;
      },
      py::arg("rho"), py::arg("trials"), py::arg("seed"), py::arg("family") = "linear");
  m.def(
      "stokes_moment_tensor",
      [](const DensityOperator& rho, int order) {
        return moment_array(stokes_moment_tensor(rho, order));
      },
      py::arg("rho"), py::arg("order"),
      "Array of shape (3,)*order; entry [k1-1, ..., km-1] is <L_k1 ... L_km>.");
  m.def("classical_unpolarized_test", &classical_unpolarized_test, py::arg("rho"),
        py::arg("tol") = kDefaultTolerance);
  m.def(
      "rotation_eigenbasis",
      [](int n) {
        py::list out;
        for (const auto& s : rotation_eigenbasis(n)) out.append(py::make_tuple(s.eigenvalue, s.vector));
        return out;
      },
      py::arg("n"));
}

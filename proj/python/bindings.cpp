// Copyright 2026 The wdwvqe Authors
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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wdwvqe/eigensolver.hpp"
#include "wdwvqe/errors.hpp"
#include "wdwvqe/qasm.hpp"
#include "wdwvqe/serialize.hpp"
#include "wdwvqe/simulator.hpp"
#include "wdwvqe/vqe.hpp"

namespace py = pybind11;
using namespace wdwvqe;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

CArray to_numpy(const ComplexMatrix& m) {
  CArray out({m.dim(), m.dim()});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) v(r, c) = m(r, c);
  return out;
}

ComplexMatrix from_numpy(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw InvalidArgument("expected a square 2-D array");
  const auto n = static_cast<std::size_t>(a.shape(0));
  auto v = a.unchecked<2>();
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v(r, c);
  return m;
}

py::object to_python(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list l;
      for (const auto& e : j) l.append(to_python(e));
      return std::move(l);
    }
    case Json::value_t::object: {
      py::dict d;
      for (const auto& [k, v] : j.items()) d[py::str(k)] = to_python(v);
      return std::move(d);
    }
    default: throw InvalidArgument("unsupported JSON value");
  }
}

using Terms = std::vector<std::pair<double, std::string>>;

Terms to_terms(const PauliSum& s) {
  Terms out;
  for (const auto& t : s.terms()) out.emplace_back(t.coeff, t.string.labels());
  return out;
}

PauliSum from_terms(const Terms& terms) {
  if (terms.empty()) throw InvalidArgument("empty Pauli term list");
  PauliSum s(static_cast<int>(terms.front().second.size()));
  for (const auto& [c, l] : terms) s.add(c, l);
  return s;
}

ModelSpec make_spec(const std::string& kind, const std::map<std::string, double>& params, bool published,
                    int qubits_per_dim, std::optional<double> spacing, double offset, int momentum_roll) {
  const ModelKind k = parse_model_kind(kind);
  ModelSpec spec = published ? paper_instance(k) : ModelSpec{};
  spec.kind = k;
  for (const auto& [key, v] : params) spec.params[key] = v;
  spec.qubits_per_dim = qubits_per_dim;
  const Grid base = default_model_grid(qubits_per_dim);
  spec.grid = Grid(base.num_points(), spacing.value_or(base.spacing()), offset, momentum_roll);
  return spec;
}

SpsaConfig make_optimizer(int iterations, bool calibrate, double a, double c) {
  SpsaConfig cfg;
  cfg.max_iterations = iterations;
  cfg.calibrate = calibrate;
  cfg.a = a;
  cfg.c = c;
  return cfg;
}

Circuit make_circuit(int num_qubits, const std::vector<py::tuple>& gates) {
  Circuit c(num_qubits);
  for (const auto& g : gates) {
    const auto name = g[0].cast<std::string>();
    if (name == "ry") c.add(Gate::ry(g[1].cast<int>(), g[2].cast<double>()));
    else if (name == "rx") c.add(Gate::rx(g[1].cast<int>(), g[2].cast<double>()));
    else if (name == "rz") c.add(Gate::rz(g[1].cast<int>(), g[2].cast<double>()));
    else if (name == "h") c.add(Gate::h(g[1].cast<int>()));
    else if (name == "x") c.add(Gate::x(g[1].cast<int>()));
    else if (name == "y") c.add(Gate::y(g[1].cast<int>()));
    else if (name == "z") c.add(Gate::z(g[1].cast<int>()));
    else if (name == "cx" || name == "cnot") c.add(Gate::cnot(g[1].cast<int>(), g[2].cast<int>()));
    else throw InvalidArgument("unknown gate '" + name + "'");
  }
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minisuperspace Hamiltonians, Pauli decomposition, exact eigensolver and VQE.";
  m.attr("__version__") = WDWVQE_VERSION;

  static py::exception<InvalidArgument> invalid(m, "InvalidArgument", PyExc_ValueError);
  static py::exception<NumericalError> numerical(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidArgument& e) {
      py::set_error(invalid, e.what());
    } catch (const NumericalError& e) {
      py::set_error(numerical, e.what());
    }
  });

  py::class_<Grid>(m, "Grid")
      .def(py::init<std::size_t, double, double, int>(), py::arg("num_points"), py::arg("spacing"),
           py::arg("offset") = 0.0, py::arg("momentum_roll") = 0)
      .def_static("with_default_spacing", &Grid::with_default_spacing, py::arg("num_qubits"),
                  py::arg("offset") = 0.0, py::arg("momentum_roll") = 0)
      .def_property_readonly("num_points", &Grid::num_points)
      .def_property_readonly("num_qubits", &Grid::num_qubits)
      .def_property_readonly("spacing", &Grid::spacing)
      .def_property_readonly("offset", &Grid::offset)
      .def_property_readonly("momentum_roll", &Grid::momentum_roll)
      .def("point", &Grid::point)
      .def("__repr__", [](const Grid& g) {
        return "Grid(num_points=" + std::to_string(g.num_points()) + ", spacing=" + std::to_string(g.spacing()) + ")";
      });

  m.def("position_operator", [](const Grid& g) { return to_numpy(position_operator(g)); });
  m.def("momentum_operator", [](const Grid& g) { return to_numpy(momentum_operator(g)); });
  m.def("dft_matrix", [](std::size_t n) { return to_numpy(dft_matrix(n)); });

  m.def("decompose", [](const CArray& a, double prune) { return to_terms(decompose(from_numpy(a), prune)); },
        py::arg("matrix"), py::arg("prune_threshold") = kDefaultPruneThreshold,
        "List of (coeff, labels), lexicographic in labels.");
  m.def("reconstruct", [](const Terms& t) { return to_numpy(reconstruct(from_terms(t))); });

  m.def("eigh", [](const CArray& a) {
    const EigResult r = eigh(from_numpy(a));
    return py::make_tuple(r.eigenvalues, to_numpy(r.eigenvectors));
  }, "Ascending eigenvalues and eigenvector columns.");

  m.def("model_names", [] {
    std::vector<std::string> out;
    for (ModelKind k : all_model_kinds()) out.push_back(model_name(k));
    return out;
  });

  m.def("build_model",
        [](const std::string& kind, const std::map<std::string, double>& params, bool published,
           int qubits_per_dim, std::optional<double> spacing, double offset, int momentum_roll, double prune) {
          const ModelInstance inst =
              build_model(make_spec(kind, params, published, qubits_per_dim, spacing, offset, momentum_roll), prune);
          py::dict d;
          d["matrix"] = to_numpy(inst.matrix);
          d["pauli"] = to_terms(inst.pauli);
          d["conventions"] = to_python(to_json(inst.conventions));
          d["model"] = to_python(to_json(inst.spec));
          return d;
        },
        py::arg("kind"), py::arg("params") = std::map<std::string, double>{}, py::arg("published_params") = false,
        py::arg("qubits_per_dim") = 2, py::arg("spacing") = py::none(), py::arg("offset") = 0.0,
        py::arg("momentum_roll") = kModelMomentumRoll, py::arg("prune_threshold") = kDefaultPruneThreshold);

  m.def("run_vqe",
        [](const Terms& h, int depth, const std::string& entanglement, int iterations, int trials,
           std::uint64_t seed, int threads, bool calibrate, double a, double c) {
          const PauliSum sum = from_terms(h);
          const AnsatzSpec ansatz{sum.num_qubits(), depth, parse_entanglement(entanglement)};
          VqeResult r;
          {
            py::gil_scoped_release release;
            r = run_vqe(sum, ansatz, make_optimizer(iterations, calibrate, a, c), trials, seed, threads);
          }
          return to_python(to_json(r));
        },
        py::arg("hamiltonian"), py::arg("depth") = 3, py::arg("entanglement") = "full",
        py::arg("iterations") = 1000, py::arg("trials") = 10, py::arg("seed") = 0, py::arg("threads") = 1,
        py::arg("calibrate") = true, py::arg("a") = SpsaConfig{}.a, py::arg("c") = SpsaConfig{}.c);

  m.def("wheeler_dewitt_report",
        [](const std::string& kind, const std::map<std::string, double>& params, bool published, int depth,
           int iterations, int trials, std::uint64_t seed, int threads) {
          WdwReportOptions opts;
          opts.depth = depth;
          opts.optimizer.max_iterations = iterations;
          opts.trials = trials;
          opts.seed = seed;
          opts.threads = threads;
          const ModelSpec spec = make_spec(kind, params, published, 2, std::nullopt, 0.0, kModelMomentumRoll);
          WdwReport r;
          {
            py::gil_scoped_release release;
            r = wheeler_dewitt_report(spec, opts);
          }
          return to_python(to_json(r));
        },
        py::arg("kind"), py::arg("params") = std::map<std::string, double>{}, py::arg("published_params") = true,
        py::arg("depth") = 3, py::arg("iterations") = 1000, py::arg("trials") = 10, py::arg("seed") = 0,
        py::arg("threads") = 1);

  m.def("simulate", [](int n, const std::vector<py::tuple>& gates) {
    const Statevector s = run(make_circuit(n, gates));
    return std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end());
  }, py::arg("num_qubits"), py::arg("gates"), "Gates are tuples like ('h', 0), ('cx', 0, 1), ('ry', 1, 0.3).");

  m.def("to_openqasm", [](int n, const std::vector<py::tuple>& gates) { return to_openqasm(make_circuit(n, gates)); },
        py::arg("num_qubits"), py::arg("gates"));

  m.def("expectation", [](std::vector<Complex> amplitudes, const Terms& h) {
    return expectation(Statevector::from_amplitudes(std::move(amplitudes)), from_terms(h));
  }, py::arg("amplitudes"), py::arg("hamiltonian"));

  m.def("sample", [](std::vector<Complex> amplitudes, std::uint64_t shots, std::uint64_t seed) {
    return sample(Statevector::from_amplitudes(std::move(amplitudes)), shots, seed);
  }, py::arg("amplitudes"), py::arg("shots"), py::arg("seed") = 0);
}

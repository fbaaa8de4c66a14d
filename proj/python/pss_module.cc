// Copyright 2026 The PSS Authors
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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pss/circuit.h"
#include "pss/clifford.h"
#include "pss/error.h"
#include "pss/extract.h"
#include "pss/frontends.h"
#include "pss/matrix.h"
#include "pss/pathsum.h"
#include "pss/rewrite.h"

namespace py = pybind11;

namespace {

py::array_t<std::complex<double>> to_numpy(const pss::CMatrix &m) {
    py::array_t<std::complex<double>> arr({m.rows, m.cols});
    auto view = arr.mutable_unchecked<2>();
    for (size_t r = 0; r < m.rows; r++) {
        for (size_t c = 0; c < m.cols; c++) {
            view(r, c) = m(r, c);
        }
    }
    return arr;
}

py::dict stats_dict(const pss::CircuitStats &s) {
    py::dict d;
    d["total"] = s.total;
    d["counts"] = s.counts;
    d["t_count"] = s.t_count;
    d["h_layers"] = s.h_layers;
    return d;
}

pss::Operator as_operator(const py::object &obj) {
    if (py::isinstance<pss::Circuit>(obj)) {
        return obj.cast<pss::Circuit>();
    }
    return obj.cast<pss::PathSum>();
}

}  // namespace

PYBIND11_MODULE(_pss, m) {
    m.doc() = "Path-sum rewriting, verification and synthesis.";

    static PyObject *error_type = py::exception<pss::Error>(m, "Error").release().ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const pss::Error &e) {
            py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
            inst.attr("kind") = std::string(pss::error_kind_name(e.kind()));
            inst.attr("detail") = e.detail();
            PyErr_SetObject(error_type, inst.ptr());
        }
    });

    py::class_<pss::PathSum>(m, "PathSum")
        .def_static("identity", &pss::PathSum::identity, py::arg("n"))
        .def_static("from_json", [](const std::string &text) { return pss::PathSum::from_json(text); })
        .def("to_json", &pss::PathSum::to_json)
        .def_readonly("inputs", &pss::PathSum::inputs)
        .def_property_readonly("outputs", &pss::PathSum::num_outputs)
        .def_property_readonly("num_paths", &pss::PathSum::num_paths)
        .def_readonly("sqrt2", &pss::PathSum::sqrt2)
        .def("to_matrix", [](const pss::PathSum &p) { return to_numpy(pss::to_matrix(p)); })
        .def("normalize", [](const pss::PathSum &p) { return pss::normalize(p).sum; })
        .def("is_clifford", [](const pss::PathSum &p) { return pss::is_clifford(p); })
        .def("is_unitary_clifford",
             [](const pss::PathSum &p) { return pss::clifford_unitarity(p) == pss::Unitarity::Unitary; })
        .def("compose", [](const pss::PathSum &after, const pss::PathSum &before) { return pss::compose(after, before); })
        .def("dagger", [](const pss::PathSum &p) { return pss::dagger(p); })
        .def("__str__", &pss::PathSum::str)
        .def("__repr__", [](const pss::PathSum &p) { return "PathSum(" + p.to_json() + ")"; })
        .def(py::self == py::self);

    py::class_<pss::Circuit>(m, "Circuit")
        .def(py::init<uint32_t>(), py::arg("width"))
        .def_static("parse", [](const std::string &text) { return pss::Circuit::parse(text); })
        .def_readonly("width", &pss::Circuit::width)
        .def("__len__", [](const pss::Circuit &c) { return c.gates.size(); })
        .def("__str__", &pss::Circuit::str)
        .def("__repr__", [](const pss::Circuit &c) { return "Circuit(" + std::to_string(c.width) + " qubits, " +
                                                            std::to_string(c.gates.size()) + " gates)"; })
        .def("gates", [](const pss::Circuit &c) {
            std::vector<std::string> out;
            for (const auto &g : c.gates) {
                out.push_back(g.str());
            }
            return out;
        })
        .def("inverse", &pss::Circuit::inverse)
        .def("extend", &pss::Circuit::extend)
        .def("stats", [](const pss::Circuit &c) { return stats_dict(pss::stats(c)); })
        .def("stage_profile", [](const pss::Circuit &c) { return pss::stage_profile(c).to_json(); })
        .def("unitary", [](const pss::Circuit &c) { return to_numpy(pss::circuit_unitary(c)); })
        .def(py::self == py::self);

    m.def("simulate", &pss::simulate, py::arg("circuit"));
    m.def("simulate_reduced", &pss::simulate_reduced, py::arg("circuit"));
    m.def(
        "synthesize",
        [](const pss::PathSum &p, bool ignore_global_phase) {
            return pss::synthesize(p, {.ignore_global_phase = ignore_global_phase});
        },
        py::arg("sum"), py::arg("ignore_global_phase") = false);
    m.def(
        "synth_clifford",
        [](const pss::PathSum &p, bool ignore_global_phase) {
            return pss::synth_clifford(p, {.ignore_global_phase = ignore_global_phase});
        },
        py::arg("sum"), py::arg("ignore_global_phase") = false);
    m.def(
        "verify",
        [](const py::object &a, const py::object &b, bool strict_phase, unsigned max_oracle_qubits) {
            pss::VerifyResult r = pss::verify_equiv(
                as_operator(a), as_operator(b),
                {.strict_phase = strict_phase, .max_oracle_qubits = max_oracle_qubits});
            py::dict d;
            d["verdict"] = std::string(pss::verdict_name(r.verdict));
            d["via_oracle"] = r.via_oracle;
            if (r.verdict == pss::Verdict::EqualUpToGlobalPhase) {
                d["phase"] = r.via_oracle ? r.oracle_phase : r.phase.to_double();
            }
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("strict_phase") = false, py::arg("max_oracle_qubits") = 10);
    m.def(
        "decompile", [](const pss::Circuit &c) { return pss::decompile(c); }, py::arg("circuit"));
    m.def(
        "clifford_pass",
        [](const pss::Circuit &c, size_t min_run) {
            pss::CliffordPassOptions opts;
            opts.min_run = min_run;
            return pss::clifford_pass(c, opts).circuit;
        },
        py::arg("circuit"), py::arg("min_run") = 4);
    m.def("qft", &pss::qft_sum, py::arg("n"));
    m.def(
        "taut",
        [](const std::string &text) {
            pss::ParsedFormula f = pss::parse_formula(text);
            pss::TautResult r = pss::taut_check(f.root, static_cast<uint32_t>(f.vars.size()));
            if (!r.encoding_agrees) {
                throw pss::Error(pss::ErrorKind::NonUnitary, "encoding disagrees with the truth table");
            }
            return r.verdict == pss::TautVerdict::Tautology;
        },
        py::arg("formula"));
    m.def(
        "random_circuit",
        [](const std::string &kind, uint32_t n, size_t gates, uint64_t seed) {
            pss::RandomKind k;
            if (kind == "clifford") {
                k = pss::RandomKind::Clifford;
            } else if (kind == "clifford+t") {
                k = pss::RandomKind::CliffordT;
            } else {
                throw py::value_error("kind must be 'clifford' or 'clifford+t'");
            }
            return pss::random_circuit(k, n, gates, seed);
        },
        py::arg("kind"), py::arg("n"), py::arg("gates"), py::arg("seed") = 0);
}

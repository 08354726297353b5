// Copyright 2026 The Magiclab Authors
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
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "magiclab/agsp.h"
#include "magiclab/glue.h"
#include "magiclab/modular.h"
#include "magiclab/prep.h"
#include "magiclab/stabilizer.h"
#include "magiclab/statevec.h"
#include "magiclab/suites.h"
#include "magiclab/zxcat.h"

namespace py = pybind11;
using namespace magiclab;

namespace {

py::dict witness_dict(const WitnessReport &w) {
    py::dict d;
    d["name"] = w.name;
    d["observed"] = w.observed;
    d["bound"] = w.bound ? py::cast(*w.bound) : py::none();
    d["pass"] = w.pass;
    d["note"] = w.note;
    py::dict values;
    for (const auto &[k, v] : w.values) {
        values[py::str(k)] = v;
    }
    d["values"] = values;
    return d;
}

ZxVariant parse_variant(const std::string &name) {
    if (name == "plus") {
        return ZxVariant::Plus;
    }
    if (name == "minus") {
        return ZxVariant::Minus;
    }
    if (name == "iphase") {
        return ZxVariant::IPhase;
    }
    throw std::invalid_argument("variant must be plus, minus or iphase");
}

Boundary parse_boundary(const std::string &name) {
    if (name == "open") {
        return Boundary::Open;
    }
    if (name == "periodic") {
        return Boundary::Periodic;
    }
    throw std::invalid_argument("boundary must be open or periodic");
}

std::string rational_str(const Rational &r) {
    return r.str();
}

Partition partition_from(const std::vector<size_t> &dims) {
    if (dims.size() != 6) {
        throw std::invalid_argument("dims needs six block sizes a, b1, b2, c1, c2, d");
    }
    return Partition::from_sizes(dims[0], dims[1], dims[2], dims[3], dims[4], dims[5]);
}

}  // namespace

PYBIND11_MODULE(_magiclab, m) {
    m.doc() = "Checks for long-range magic constructions";

    m.def("max_qubits", &max_qubits);
    m.def("set_max_qubits", &set_max_qubits, py::arg("n"));

    py::class_<PauliString>(m, "PauliString")
        .def(py::init(&PauliString::from_text), py::arg("text"))
        .def_property_readonly("num_qubits", &PauliString::num_qubits)
        .def_property_readonly("weight", &PauliString::weight)
        .def("__mul__", [](const PauliString &a, const PauliString &b) { return a * b; })
        .def("__eq__", [](const PauliString &a, const PauliString &b) { return a == b; })
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &p) { return "PauliString('" + p.str() + "')"; });
    m.def("commutes", &commutes, py::arg("p"), py::arg("q"));

    py::class_<StabilizerState>(m, "StabilizerState")
        .def(py::init([](const std::vector<std::string> &texts) {
                 std::vector<std::string_view> views(texts.begin(), texts.end());
                 return StabilizerState::from_texts(views);
             }),
             py::arg("generators"))
        .def_static("zero", &StabilizerState::zero_state, py::arg("n"))
        .def_static("plus", &StabilizerState::plus_state, py::arg("n"))
        .def_static("random", &random_stabilizer_state, py::arg("n"), py::arg("seed"))
        .def_property_readonly("num_qubits", &StabilizerState::num_qubits)
        .def_property_readonly("generators",
                               [](const StabilizerState &s) {
                                   std::vector<std::string> out;
                                   for (const auto &g : s.generators()) {
                                       out.push_back(g.str());
                                   }
                                   return out;
                               })
        .def("statevector", [](const StabilizerState &s) { return to_statevector(s).amplitudes(); })
        .def("__eq__", [](const StabilizerState &a, const StabilizerState &b) { return a == b; });
    m.def("stabilizer_overlap", &stabilizer_overlap, py::arg("s1"), py::arg("s2"));
    m.def("stabilizer_overlap_log2", &stabilizer_overlap_log2, py::arg("s1"), py::arg("s2"));
    m.def("pauli_sandwich", &pauli_sandwich, py::arg("s2"), py::arg("p"), py::arg("s1"));

    m.def(
        "build_zxcat", [](size_t n, const std::string &variant) { return build_zxcat(n, parse_variant(variant)).amplitudes(); },
        py::arg("n"), py::arg("variant") = "plus");
    m.def("mi_numeric", &mi_numeric, py::arg("n"), py::arg("i") = 0, py::arg("j") = 1);
    m.def("mi_asymptote", &mi_asymptote);
    m.def("zplus_z_expectation", &zplus_z_expectation, py::arg("n"));
    m.def(
        "crossterm_bound_check",
        [](size_t n, uint64_t seed, size_t trials) { return witness_dict(crossterm_bound_check(n, seed, trials)); },
        py::arg("n"), py::arg("seed"), py::arg("trials"));
    m.def(
        "cu_witness_identity",
        [](size_t n, size_t i, size_t j) {
            return witness_dict(cu_correlation_witness(CliffordMap::identity(n), LayeredCircuit(n), i, j));
        },
        py::arg("n"), py::arg("i"), py::arg("j"));
    m.def(
        "uc_witness_random",
        [](size_t n, size_t depth, uint64_t seed) {
            Rng rng(seed);
            return witness_dict(uc_sign_witness(random_layered_circuit(n, depth, rng)));
        },
        py::arg("n"), py::arg("depth"), py::arg("seed"));

    m.def(
        "agsp_coefficients",
        [](size_t n, size_t mdeg) {
            std::vector<std::string> out;
            for (const auto &c : build_polynomial(n, mdeg).coefficients()) {
                out.push_back(rational_str(c));
            }
            return out;
        },
        py::arg("n"), py::arg("m"));
    m.def(
        "agsp_step_error",
        [](size_t n, size_t mdeg) {
            auto poly = build_polynomial(n, mdeg);
            auto e = step_error_sup(poly);
            auto id = coeff_sum_identity(poly);
            py::dict d;
            d["sup_error"] = e.sup;
            d["bound"] = e.bound;
            d["argmax"] = e.argmax;
            d["coeff_sum"] = id.sum_value;
            d["p_minus_n"] = rational_str(id.p_minus_n);
            d["identity_exact"] = id.exact_equal;
            d["signs_alternate"] = signs_alternate(poly);
            return d;
        },
        py::arg("n"), py::arg("m"));
    m.def(
        "complexity_bound",
        [](size_t n, double d, double eps, double delta) {
            auto b = complexity_bound(n, d, eps, delta);
            py::dict out;
            out["bound"] = b.bound;
            out["alpha"] = b.alpha;
            out["depth_threshold"] = b.depth_threshold ? py::cast(*b.depth_threshold) : py::none();
            return out;
        },
        py::arg("n"), py::arg("d"), py::arg("epsilon"), py::arg("delta"));
    m.def("select_degree", &select_degree, py::arg("n"), py::arg("d"), py::arg("epsilon"),
          py::arg("c") = std::optional<double>());

    m.def(
        "prepare_sandwich", [](size_t n) { return prepare_sandwich(n).amplitudes(); }, py::arg("n"));
    m.def("verify_global_clifford", &verify_global_clifford, py::arg("n"));
    m.def("adaptive_success_probability", &adaptive_success_probability, py::arg("n"));
    m.def(
        "adaptive_run",
        [](size_t n, uint64_t seed) {
            auto r = adaptive_run(n, seed);
            py::dict d;
            d["outcomes"] = std::vector<int>(r.outcomes.begin(), r.outcomes.end());
            d["parity"] = r.parity;
            d["accepted"] = r.accepted;
            d["state"] = r.post_state.amplitudes();
            return d;
        },
        py::arg("n"), py::arg("seed"));
    m.def(
        "mps_contract", [](size_t n, const std::string &b) { return mps_contract(n, parse_boundary(b)).amplitudes(); },
        py::arg("n"), py::arg("boundary") = "periodic");
    m.def("push_relation_residual", [] { return push_relation_residual(); });
    m.def(
        "bell_protocol_run",
        [](size_t n, uint64_t seed) {
            auto r = bell_protocol_run(n, seed);
            py::dict d;
            std::vector<std::pair<int, int>> outcomes;
            for (auto [z, x] : r.outcomes) {
                outcomes.emplace_back(z, x);
            }
            d["outcomes"] = outcomes;
            d["h_flags"] = std::vector<int>(r.h_flags.begin(), r.h_flags.end());
            d["residual_x"] = r.residual_x;
            d["residual_z"] = r.residual_z;
            d["accepted"] = r.accepted;
            d["state"] = r.state.amplitudes();
            return d;
        },
        py::arg("n"), py::arg("seed"));

    m.def("double_fibonacci_json", [] { return modular_to_json(double_fibonacci()); });
    m.def(
        "verlinde_dim",
        [](int genus, const std::string &data) {
            auto d = data.empty() ? double_fibonacci() : modular_from_json(data);
            GoldenNumber v = verlinde_dim(d.dims, genus);
            return py::make_tuple(v.to_double(), v.str());
        },
        py::arg("genus"), py::arg("data_json") = "");
    m.def(
        "lpu_search",
        [](const std::string &data, double tol) {
            auto d = data.empty() ? double_fibonacci() : modular_from_json(data);
            auto r = lpu_search(d, tol);
            py::list cases;
            for (const auto &c : r.cases) {
                if (c.status == SolveStatus::Inconsistent) {
                    continue;
                }
                py::dict e;
                e["perm"] = c.perm;
                e["pattern"] = c.pattern;
                std::vector<std::string> z;
                for (const auto &v : c.z) {
                    z.push_back(v.str());
                }
                e["z"] = z;
                e["unimodular"] = c.unimodular;
                e["st_distance"] = c.st_distance ? py::cast(*c.st_distance) : py::none();
                e["survives"] = c.survives;
                cases.append(e);
            }
            std::vector<std::vector<size_t>> survivors;
            for (const auto &s : r.survivors) {
                survivors.push_back(s.perm);
            }
            py::dict out;
            out["cases"] = cases;
            out["survivors"] = survivors;
            return out;
        },
        py::arg("data_json") = "", py::arg("tol") = 1e-9);

    m.def(
        "glue",
        [](const std::vector<size_t> &dims, uint64_t seed, double tol) {
            auto inst = generate_gluable_instance(partition_from(dims), seed);
            auto p = check_premises(inst, tol);
            auto g = glue_states(inst, tol);
            py::dict d;
            d["premises_ok"] = p.ok();
            d["failed"] = p.failed;
            d["abc_residual"] = g.abc_residual;
            d["bcd_residual"] = g.bcd_residual;
            d["mi_a_cd"] = g.mi_a_cd;
            d["mi_ab_d"] = g.mi_ab_d;
            d["conclusions_hold"] = g.conclusions_hold;
            d["u_a"] = g.u_a;
            d["state"] = g.state.amplitudes();
            return d;
        },
        py::arg("dims"), py::arg("seed"), py::arg("tol") = 1e-8);
    m.def(
        "petz_glue",
        [](const std::vector<size_t> &dims, uint64_t seed) {
            auto r = petz_glue(generate_gluable_instance(partition_from(dims), seed));
            py::dict d;
            d["psi_distance"] = r.psi_distance;
            d["glued_distance"] = r.glued_distance;
            d["trace_error"] = r.trace_error;
            return d;
        },
        py::arg("dims"), py::arg("seed"));

    m.def("suite_names", &suite_names);
    m.def(
        "run_checks_json",
        [](const std::string &suite, uint64_t seed, std::optional<size_t> n, std::optional<size_t> trials,
           std::optional<double> tol) {
            auto reports = run_checks(suite, SuiteParams{seed, n, trials, tol});
            return reports_to_string(reports, false, false);
        },
        py::arg("suite"), py::arg("seed") = 7, py::arg("n") = std::nullopt, py::arg("trials") = std::nullopt,
        py::arg("tol") = std::nullopt);
}

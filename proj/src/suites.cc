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

#include "magiclab/suites.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>

#include "magiclab/agsp.h"
#include "magiclab/glue.h"
#include "magiclab/linalg.h"
#include "magiclab/modular.h"
#include "magiclab/prep.h"
#include "magiclab/random.h"
#include "magiclab/stabilizer.h"
#include "magiclab/statevec.h"
#include "magiclab/zxcat.h"

namespace magiclab {

namespace {

enum class Relation { AtMost, AtLeast, Below, Above, Equal };

const char *relation_text(Relation r) {
    switch (r) {
        case Relation::AtMost:
            return "<=";
        case Relation::AtLeast:
            return ">=";
        case Relation::Below:
            return "<";
        case Relation::Above:
            return ">";
        case Relation::Equal:
            return "==";
    }
    return "?";
}

bool compare(double observed, Relation r, double bound) {
    switch (r) {
        case Relation::AtMost:
            return observed <= bound;
        case Relation::AtLeast:
            return observed >= bound;
        case Relation::Below:
            return observed < bound;
        case Relation::Above:
            return observed > bound;
        case Relation::Equal:
            return observed == bound;
    }
    return false;
}

/// Scalar report whose pass flag follows from observed, relation and bound.
CheckReport scalar(Json params, double observed, Relation r, double bound) {
    CheckReport rep;
    params["relation"] = relation_text(r);
    rep.params = std::move(params);
    rep.observed = observed;
    rep.bound = bound;
    rep.pass = compare(observed, r, bound);
    return rep;
}

struct Ctx {
    SuiteParams p;
    uint64_t seed(uint64_t index) const { return derive_seed(p.seed, index); }
    size_t n_or(size_t d) const { return p.n.value_or(d); }
    size_t trials_or(size_t d) const { return p.trials.value_or(d); }
    double tol_or(double d) const { return p.tol.value_or(d); }
};

using Check = std::pair<std::string, std::function<CheckReport(const Ctx &)>>;

PauliString random_pauli(size_t n, Rng &rng) {
    std::string text;
    for (size_t q = 0; q < n; q++) {
        text += "IXYZ"[rng.below(4)];
    }
    return PauliString::from_text(text);
}

double half_integer_gap(double log2_value) {
    double twice = 2 * log2_value;
    return std::abs(twice - std::round(twice));
}

// ---------------------------------------------------------------- symplectic

std::vector<Check> symplectic_checks() {
    std::vector<Check> out;
    out.emplace_back("symplectic.overlap_vs_statevector", [](const Ctx &c) {
        size_t nmax = std::min<size_t>(c.n_or(6), 8);
        size_t trials = c.trials_or(1000);
        double worst = 0;
        for (size_t t = 0; t < trials; t++) {
            size_t n = 1 + t % nmax;
            auto s1 = random_stabilizer_state(n, c.seed(2 * t));
            auto s2 = random_stabilizer_state(n, c.seed(2 * t + 1));
            double dense = std::abs(to_statevector(s1).inner(to_statevector(s2)));
            worst = std::max(worst, std::abs(stabilizer_overlap(s1, s2) - dense));
        }
        return scalar({{"n_max", nmax}, {"trials", trials}}, worst, Relation::AtMost, c.tol_or(1e-10));
    });
    out.emplace_back("symplectic.overlap_half_integer", [](const Ctx &c) {
        size_t nmax = c.n_or(6);
        size_t trials = c.trials_or(1000);
        double worst = 0;
        size_t nonzero = 0;
        for (size_t t = 0; t < trials; t++) {
            size_t n = 1 + t % nmax;
            auto l = stabilizer_overlap_log2(random_stabilizer_state(n, c.seed(2 * t)),
                                             random_stabilizer_state(n, c.seed(2 * t + 1)));
            if (l) {
                nonzero++;
                worst = std::max(worst, half_integer_gap(*l));
            }
        }
        return scalar({{"n_max", nmax}, {"trials", trials}, {"nonzero", nonzero}}, worst, Relation::AtMost, 1e-9);
    });
    out.emplace_back("symplectic.sandwich_equals_overlap", [](const Ctx &c) {
        size_t nmax = c.n_or(6);
        size_t want = c.trials_or(1000);
        Rng rng(c.seed(0));
        double worst = 0;
        size_t found = 0;
        for (size_t t = 0; t < 40 * want && found < want; t++) {
            size_t n = 1 + t % nmax;
            auto s1 = random_stabilizer_state(n, c.seed(2 * t + 1));
            auto s2 = random_stabilizer_state(n, c.seed(2 * t + 2));
            auto p = random_pauli(n, rng);
            double base = stabilizer_overlap(s1, s2);
            double sw = pauli_sandwich(s2, p, s1);
            if (base > 0 && sw > 0) {
                found++;
                worst = std::max(worst, std::abs(sw - base));
            }
        }
        auto rep = scalar({{"n_max", nmax}, {"cases", found}}, worst, Relation::AtMost, c.tol_or(1e-10));
        rep.pass = rep.pass && found == want;
        return rep;
    });
    out.emplace_back("symplectic.commutation_consistency", [](const Ctx &c) {
        Rng rng(c.seed(0));
        size_t trials = c.trials_or(1000) * 10;
        size_t bad = 0;
        for (size_t t = 0; t < trials; t++) {
            size_t n = 1 + rng.below(8);
            auto p = random_pauli(n, rng);
            auto q = random_pauli(n, rng);
            bad += commutes(p, q) != (p * q == q * p);
        }
        return scalar({{"trials", trials}}, static_cast<double>(bad), Relation::AtMost, 0);
    });
    out.emplace_back("symplectic.clifford_inverse", [](const Ctx &c) {
        size_t n = c.n_or(6);
        size_t trials = std::max<size_t>(1, c.trials_or(1000) / 10);
        size_t bad = 0;
        for (size_t t = 0; t < trials; t++) {
            auto m = random_clifford(n, c.seed(t));
            bad += !(m.then(m.inverse()) == CliffordMap::identity(n));
        }
        return scalar({{"n", n}, {"trials", trials}}, static_cast<double>(bad), Relation::AtMost, 0);
    });
    out.emplace_back("symplectic.clifford_vs_statevector", [](const Ctx &c) {
        size_t nmax = std::min<size_t>(c.n_or(6), 10);
        size_t trials = std::max<size_t>(1, c.trials_or(1000) / 10);
        double worst = 0;
        for (size_t t = 0; t < trials; t++) {
            size_t n = 1 + t % nmax;
            auto gates = random_clifford_gates(n, c.seed(t));
            auto tableau = to_statevector(apply_clifford(CliffordMap::from_gates(n, gates), StabilizerState::zero_state(n)));
            auto dense = apply_circuit(clifford_circuit(n, gates), StateVector(n));
            worst = std::max(worst, std::abs(1 - state_fidelity(tableau, dense)));
        }
        return scalar({{"n_max", nmax}, {"trials", trials}}, worst, Relation::AtMost, c.tol_or(1e-10));
    });
    return out;
}

// --------------------------------------------------------------------- zxcat

std::vector<Check> zxcat_checks() {
    std::vector<Check> out;
    out.emplace_back("zxcat.normalization", [](const Ctx &c) {
        size_t nmax = std::min(c.n_or(10), max_qubits());
        double worst = 0;
        for (size_t n = 1; n <= nmax; n++) {
            auto plus = build_zxcat(n, ZxVariant::Plus);
            auto minus = build_zxcat(n, ZxVariant::Minus);
            worst = std::max({worst, std::abs(plus.norm() - 1), std::abs(minus.norm() - 1), std::abs(plus.inner(minus))});
        }
        return scalar({{"n_max", nmax}}, worst, Relation::AtMost, 1e-12);
    });
    out.emplace_back("zxcat.z_expectation_closed_form", [](const Ctx &c) {
        size_t nmax = std::min(c.n_or(12), max_qubits());
        double worst = 0;
        for (size_t n = 1; n <= nmax; n++) {
            double numeric = pauli_expectation(build_zxcat(n, ZxVariant::Plus), PauliString::single(n, 0, 'Z'));
            worst = std::max(worst, std::abs(numeric - zplus_z_expectation(n)));
        }
        return scalar({{"n_max", nmax}}, worst, Relation::AtMost, 1e-10);
    });
    out.emplace_back("zxcat.mi_asymptote", [](const Ctx &c) {
        size_t n = c.n_or(12);
        double mi = mi_numeric(n);
        double limit = mi_asymptote();
        auto rep = scalar({{"n", n}, {"mi_numeric", mi}, {"mi_asymptote", limit}}, std::abs(mi - limit),
                          Relation::AtMost, 0.02);
        return rep;
    });
    out.emplace_back("zxcat.mi_positive", [](const Ctx &c) {
        size_t nmax = c.n_or(12);
        double least = std::numeric_limits<double>::infinity();
        for (size_t n = 2; n <= nmax; n++) {
            least = std::min(least, mi_numeric(n));
        }
        return scalar({{"n_max", nmax}}, least, Relation::Above, 0);
    });
    out.emplace_back("zxcat.crossterm_bound", [](const Ctx &c) {
        size_t n = c.n_or(10);
        size_t trials = c.trials_or(500);
        auto r = crossterm_bound_check(n, c.seed(0), trials);
        auto rep = scalar({{"n", n}, {"trials", trials}, {"violations", r.get("violations")}}, r.observed,
                          Relation::AtMost, 1.0);
        rep.pass = rep.pass && r.pass;
        return rep;
    });
    out.emplace_back("zxcat.cu_witness_identity", [](const Ctx &c) {
        size_t n = c.n_or(12);
        LayeredCircuit u(n);
        auto r = cu_correlation_witness(CliffordMap::identity(n), u, 0, n / 2);
        double tol = std::exp2(1 - static_cast<double>(n) / 2);
        CheckReport rep;
        rep.params = {{"n", n}, {"i", 0}, {"j", n / 2}, {"expectation_tolerance", tol}, {"relation", "gap >"}};
        rep.observed = Json::array(
            {r.get("g_expectation"), r.get("g_prime_expectation"), r.get("gg_prime_expectation"), r.get("gap")});
        rep.bound = 0.2;
        rep.pass = std::abs(r.get("g_expectation") - 0.5) <= tol && std::abs(r.get("g_prime_expectation") - 0.5) <= tol &&
                   std::abs(r.get("gg_prime_expectation") - 0.5) <= tol && r.get("gap") > 0.2;
        return rep;
    });
    out.emplace_back("zxcat.cu_witness_random_clifford", [](const Ctx &c) {
        size_t n = std::min<size_t>(c.n_or(10), 14);
        size_t trials = std::max<size_t>(1, c.trials_or(500) / 50);
        double least = std::numeric_limits<double>::infinity();
        size_t missing = 0;
        for (size_t t = 0; t < trials; t++) {
            auto cl = random_clifford(n, c.seed(t));
            auto plan = adapted_fanout_circuit(cl);
            if (!plan) {
                missing++;
                continue;
            }
            least = std::min(least, cu_correlation_witness(cl, plan->circuit, plan->seed_i, plan->seed_j).get("gap"));
        }
        auto rep = scalar({{"n", n}, {"trials", trials}, {"no_plan", missing}}, least, Relation::Above, 0.1);
        rep.pass = rep.pass && missing == 0;
        return rep;
    });
    out.emplace_back("zxcat.uc_identity_equality", [](const Ctx &c) {
        size_t n = c.n_or(10);
        LayeredCircuit u(n);
        auto r = uc_sign_witness(u);
        return scalar({{"n", n}, {"fidelity", r.get("fidelity_i")}}, std::abs(r.get("fidelity_i") - std::sqrt(0.5)),
                      Relation::AtMost, 1e-10);
    });
    out.emplace_back("zxcat.uc_dpi_random", [](const Ctx &c) {
        size_t n = c.n_or(10);
        size_t trials = c.trials_or(200);
        Rng rng(c.seed(0));
        size_t violations = 0;
        double margin = std::numeric_limits<double>::infinity();
        for (size_t t = 0; t < trials; t++) {
            auto r = uc_sign_witness(random_layered_circuit(n, 1, rng));
            violations += !r.pass;
            margin = std::min(margin, r.get("fidelity_i") - r.get("bound_i"));
        }
        return scalar({{"n", n}, {"trials", trials}, {"depth", 1}, {"min_margin", margin}},
                      static_cast<double>(violations), Relation::AtMost, 0);
    });
    out.emplace_back("zxcat.am_gm_report", [](const Ctx &c) {
        size_t n = c.n_or(10);
        size_t trials = std::max<size_t>(1, c.trials_or(200) / 10);
        Rng rng(c.seed(0));
        size_t failures = 0;
        for (size_t t = 0; t < trials; t++) {
            auto u = random_layered_circuit(n, 1, rng);
            auto pair = disjoint_cone_pair(u);
            if (!pair) {
                failures++;
                continue;
            }
            std::vector<size_t> seeds = {pair->first, pair->second};
            std::vector<PauliString> ps;
            for (size_t k : seeds) {
                std::vector<size_t> s = {k};
                std::string text(n, 'I');
                for (size_t q : backward_cone(u, s).qubits) {
                    text[q] = "XYZ"[rng.below(3)];
                }
                ps.push_back(PauliString::from_text(text));
            }
            failures += !am_gm_report(u, seeds, ps).pass;
        }
        return scalar({{"n", n}, {"trials", trials}}, static_cast<double>(failures), Relation::AtMost, 0);
    });
    return out;
}

// ---------------------------------------------------------------------- agsp

std::vector<std::pair<size_t, size_t>> agsp_grid() {
    std::vector<std::pair<size_t, size_t>> grid;
    for (size_t n : {16, 64, 256}) {
        size_t mmax = static_cast<size_t>(3 * std::sqrt(static_cast<double>(n)));
        for (size_t m = 1; m <= mmax; m = (m < 4 ? m + 1 : m + m / 2)) {
            grid.emplace_back(n, m);
        }
        grid.emplace_back(n, mmax);
    }
    return grid;
}

std::vector<Check> agsp_checks() {
    std::vector<Check> out;
    out.emplace_back("agsp.step_error_grid", [](const Ctx &) {
        double worst = 0;
        auto grid = agsp_grid();
        for (auto [n, m] : grid) {
            auto e = step_error_sup(build_polynomial(n, m));
            worst = std::max(worst, e.sup / e.bound);
        }
        return scalar({{"points", grid.size()}, {"observed_is", "max sup / (2 exp(-2m/sqrt n))"}}, worst,
                      Relation::AtMost, 1.0);
    });
    out.emplace_back("agsp.coeff_sum_identity", [](const Ctx &) {
        size_t bad = 0;
        double worst_rel = 0;
        auto grid = agsp_grid();
        for (auto [n, m] : grid) {
            auto id = coeff_sum_identity(build_polynomial(n, m));
            bad += !id.exact_equal;
            worst_rel = std::max(worst_rel, id.relative_error);
        }
        return scalar({{"points", grid.size()}, {"cosh_form_relative_error", worst_rel}}, static_cast<double>(bad),
                      Relation::AtMost, 0);
    });
    out.emplace_back("agsp.sign_alternation", [](const Ctx &) {
        size_t bad = 0;
        auto grid = agsp_grid();
        for (auto [n, m] : grid) {
            bad += !signs_alternate(build_polynomial(n, m));
        }
        return scalar({{"points", grid.size()}}, static_cast<double>(bad), Relation::AtMost, 0);
    });
    out.emplace_back("agsp.normalization", [](const Ctx &) {
        size_t bad = 0;
        auto grid = agsp_grid();
        for (auto [n, m] : grid) {
            auto poly = build_polynomial(n, m);
            bad += poly.coefficient(0) != 1 || poly.evaluate_exact(Rational(0)) != 1;
        }
        return scalar({{"points", grid.size()}}, static_cast<double>(bad), Relation::AtMost, 0);
    });
    out.emplace_back("agsp.operator_matches_scalar", [](const Ctx &) {
        double worst = 0;
        for (size_t m = 1; m < 9; m++) {
            auto op = agsp_operator_check(9, m);
            worst = std::max(worst, std::abs(op.deviation - step_error_sup(build_polynomial(9, m)).sup));
        }
        return scalar({{"n", 9}, {"m_max", 8}}, worst, Relation::AtMost, 0);
    });
    out.emplace_back("agsp.complexity_monotone_in_d", [](const Ctx &) {
        size_t bad = 0;
        for (size_t n : {64, 1024, 65536}) {
            double nd = static_cast<double>(n);
            double previous = -std::numeric_limits<double>::infinity();
            for (double d = 1; d <= nd; d *= 1.5) {
                double b = complexity_bound(n, d, std::exp(-nd / 6), 1 / std::sqrt(nd)).bound;
                bad += b < previous;
                previous = b;
            }
        }
        return scalar({{"n", Json::array({64, 1024, 65536})}}, static_cast<double>(bad), Relation::AtMost, 0);
    });
    out.emplace_back("agsp.degree_selection", [](const Ctx &) {
        double worst = 0;
        for (size_t n : {16, 64, 256}) {
            for (double eps : {1e-3, 1e-6, 1e-12}) {
                size_t m = select_degree(n, n, eps);
                worst = std::max(worst, coeff_sum_identity(build_polynomial(n, m)).sum_value * eps / std::sqrt(eps));
            }
        }
        return scalar({{"observed_is", "max eps * sum|a_k| n^k / sqrt(eps)"}}, worst, Relation::AtMost, 1.0);
    });
    out.emplace_back("agsp.local_indistinguishability", [](const Ctx &c) {
        size_t n = c.n_or(10);
        auto r = local_indist_scan(n, 3, c.seed(0), c.trials_or(100));
        return scalar({{"n", n}, {"max_support", 3}, {"operators", r.get("operators_scanned")}}, r.observed,
                      Relation::AtMost, 8.0);
    });
    return out;
}

// ---------------------------------------------------------------------- prep

std::vector<Check> prep_checks() {
    std::vector<Check> out;
    out.emplace_back("prep.sandwich_fidelity", [](const Ctx &c) {
        size_t nmax = std::min(c.n_or(12), max_qubits());
        double least = 1;
        for (size_t n = 1; n <= nmax; n++) {
            least = std::min(least, state_fidelity(prepare_sandwich(n), build_zxcat(n, ZxVariant::IPhase)));
        }
        return scalar({{"n_max", nmax}}, least, Relation::AtLeast, 1 - 1e-12);
    });
    out.emplace_back("prep.global_clifford", [](const Ctx &) {
        size_t bad = 0;
        for (size_t n = 1; n <= 64; n++) {
            bad += !verify_global_clifford(n);
        }
        return scalar({{"n_max", 64}, {"dense_n_max", 6}}, static_cast<double>(bad), Relation::AtMost, 0);
    });
    out.emplace_back("prep.adaptive_exact_probability", [](const Ctx &c) {
        size_t nmax = std::min<size_t>(c.n_or(12), 12);
        double worst = 0;
        for (size_t n = 1; n <= nmax; n++) {
            worst = std::max(worst, std::abs(adaptive_success_probability(n) -
                                             (1 + std::exp2(-static_cast<double>(n) / 2)) / 2));
        }
        return scalar({{"n_max", nmax}}, worst, Relation::AtMost, 1e-12);
    });
    out.emplace_back("prep.adaptive_above_half", [](const Ctx &c) {
        size_t nmax = std::min<size_t>(c.n_or(12), 12);
        double least = 1;
        for (size_t n = 1; n <= nmax; n++) {
            least = std::min(least, adaptive_success_probability(n));
        }
        return scalar({{"n_max", nmax}}, least, Relation::Above, 0.5);
    });
    out.emplace_back("prep.adaptive_accepted_runs", [](const Ctx &c) {
        size_t n = std::min<size_t>(c.n_or(4), max_qubits() / 2);
        size_t trials = c.trials_or(100);
        auto plus = build_zxcat(n, ZxVariant::Plus);
        double least = 1;
        size_t accepted = 0;
        for (size_t t = 0; t < trials; t++) {
            auto rec = adaptive_run(n, c.seed(t));
            if (rec.accepted) {
                accepted++;
                least = std::min(least, state_fidelity(rec.post_state, plus));
            }
        }
        return scalar({{"n", n}, {"trials", trials}, {"accepted", accepted}}, least, Relation::AtLeast, 1 - 1e-10);
    });
    out.emplace_back("prep.mps_contraction", [](const Ctx &c) {
        size_t nmax = std::min(c.n_or(12), max_qubits());
        double least = 1;
        for (size_t n = 1; n <= nmax; n++) {
            auto plus = build_zxcat(n, ZxVariant::Plus);
            least = std::min({least, state_fidelity(mps_contract(n, Boundary::Open), plus),
                              state_fidelity(mps_contract(n, Boundary::Periodic), plus)});
        }
        return scalar({{"n_max", nmax}}, least, Relation::AtLeast, 1 - 1e-12);
    });
    out.emplace_back("prep.push_relations", [](const Ctx &) {
        return scalar(Json::object(), push_relation_residual(), Relation::AtMost, 1e-12);
    });
    out.emplace_back("prep.bell_protocol", [](const Ctx &c) {
        size_t n = std::min<size_t>(c.n_or(3), max_qubits() / 3);
        size_t trials = c.trials_or(200);
        auto plus = build_zxcat(n, ZxVariant::Plus);
        double least = 1;
        size_t accepted = 0;
        for (size_t t = 0; t < trials; t++) {
            auto rec = bell_protocol_run(n, c.seed(t));
            if (rec.accepted) {
                accepted++;
                least = std::min(least, state_fidelity(rec.state, plus));
            }
        }
        double rate = static_cast<double>(accepted) / static_cast<double>(trials);
        auto rep = scalar({{"n", n}, {"trials", trials}, {"acceptance_rate", rate}}, least, Relation::AtLeast,
                          1 - 1e-10);
        rep.pass = rep.pass && accepted > 0;
        return rep;
    });
    return out;
}

// ------------------------------------------------------------------- modular

Eigen::MatrixXcd random_nonscalar_monomial(size_t dim, Rng &rng) {
    while (true) {
        std::vector<size_t> pi(dim);
        std::iota(pi.begin(), pi.end(), 0);
        std::shuffle(pi.begin(), pi.end(), rng.engine());
        MonomialCandidate cand{pi, {}};
        for (size_t j = 0; j < dim; j++) {
            cand.z.push_back(std::polar(1.0, 2 * M_PI * rng.uniform()));
        }
        Eigen::MatrixXcd k = cand.matrix();
        Eigen::MatrixXcd scalar_part = k(0, 0) * Eigen::MatrixXcd::Identity(k.rows(), k.cols());
        if ((k - scalar_part).cwiseAbs().maxCoeff() > 1e-6) {
            return k;
        }
    }
}

std::vector<Check> modular_checks() {
    std::vector<Check> out;
    out.emplace_back("modular.lpu_identity_only", [](const Ctx &c) {
        auto r = lpu_search(double_fibonacci(), c.tol_or(1e-9));
        bool identity = r.survivors.size() == 1 && r.survivors[0].perm == std::vector<size_t>{0, 1, 2, 3};
        auto rep = scalar({{"cases", r.cases.size()}}, static_cast<double>(r.survivors.size()), Relation::Equal, 1);
        rep.pass = rep.pass && identity;
        return rep;
    });
    out.emplace_back("modular.identity_case_solution", [](const Ctx &c) {
        auto r = lpu_search(double_fibonacci(), c.tol_or(1e-9));
        double worst = 1;
        for (const auto &cs : r.cases) {
            if (cs.perm == std::vector<size_t>{0, 1, 2, 3} && cs.pattern == cs.perm && cs.status == SolveStatus::Unique) {
                worst = 0;
                for (const auto &z : cs.z) {
                    worst = std::max(worst, std::abs((z - GoldenNumber(1)).to_double()));
                }
            }
        }
        return scalar({{"perm", "identity"}}, worst, Relation::Equal, 0);
    });
    out.emplace_back("modular.swap_case_not_monomial", [](const Ctx &c) {
        auto r = lpu_search(double_fibonacci(), c.tol_or(1e-9));
        double dist = 0;
        for (const auto &cs : r.cases) {
            if (cs.perm == std::vector<size_t>{0, 2, 1, 3} && cs.st_distance) {
                dist = *cs.st_distance;
            }
        }
        return scalar({{"perm", "(2 3)"}}, dist, Relation::Above, 0.1);
    });
    out.emplace_back("modular.offdiag_modulus_scan", [](const Ctx &c) {
        size_t samples = c.trials_or(10000);
        auto d = double_fibonacci();
        double worst = 0;
        for (const auto &perm : dim_preserving_perms(d.dims)) {
            worst = std::max(worst, offdiag_modulus_scan(d, perm, samples, c.seed(perm[1])));
        }
        return scalar({{"samples", samples}, {"margin", 1 - worst}}, worst, Relation::Below, 1.0);
    });
    out.emplace_back("modular.modular_relations", [](const Ctx &) {
        auto d = double_fibonacci();
        Eigen::MatrixXcd s = d.s_matrix();
        Eigen::MatrixXcd st = s * d.t_matrix();
        Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
        double a = (s * s - id).cwiseAbs().maxCoeff();
        double b = (st * st * st - s * s).cwiseAbs().maxCoeff();
        return scalar({{"s_squared_residual", a}, {"st_cubed_residual", b}}, std::max(a, b), Relation::AtMost, 1e-9);
    });
    out.emplace_back("modular.verlinde_genus_2", [](const Ctx &) {
        GoldenNumber v = verlinde_dim(double_fibonacci().dims, 2);
        auto rep = scalar({{"genus", 2}, {"exact", v.str()}}, v.to_double(), Relation::Equal, 25);
        rep.pass = v == GoldenNumber(25);
        return rep;
    });
    out.emplace_back("modular.rigidity_scalar", [](const Ctx &c) {
        size_t attempts = c.trials_or(2000);
        Eigen::MatrixXcd k = 2.0 * Eigen::MatrixXcd::Identity(9, 9);
        bool witness = scalar_rigidity_trial(3, k, attempts, c.seed(0), c.tol_or(1e-9)).has_value();
        return scalar({{"n", 3}, {"attempts", attempts}}, witness ? 1.0 : 0.0, Relation::Equal, 0);
    });
    out.emplace_back("modular.rigidity_nonscalar", [](const Ctx &c) {
        size_t count = std::max<size_t>(1, c.trials_or(2000) / 100);
        Rng rng(c.seed(0));
        size_t missing = 0;
        for (size_t t = 0; t < count; t++) {
            size_t n = 3 + t % 2;
            Eigen::MatrixXcd k = random_nonscalar_monomial(n * n, rng);
            missing += !scalar_rigidity_trial(n, k, 1000, c.seed(t + 1), c.tol_or(1e-9)).has_value();
        }
        return scalar({{"matrices", count}, {"attempts_each", 1000}}, static_cast<double>(missing), Relation::AtMost,
                      0);
    });
    return out;
}

// ---------------------------------------------------------------------- glue

std::vector<Check> glue_checks() {
    std::vector<Check> out;
    const Partition unit = Partition::from_sizes(1, 1, 1, 1, 1, 1);
    out.emplace_back("glue.premises", [unit](const Ctx &c) {
        size_t trials = c.trials_or(100);
        double worst = 0;
        for (size_t t = 0; t < trials; t++) {
            auto r = check_premises(generate_gluable_instance(unit, c.seed(t)));
            worst = std::max({worst, r.bc_residual, r.mi_a_cd, r.mi_ab_d, r.d_entropy_gap});
        }
        return scalar({{"trials", trials}, {"dims", "1,1,1,1,1,1"}}, worst, Relation::AtMost, 1e-10);
    });
    out.emplace_back("glue.conclusions", [unit](const Ctx &c) {
        size_t trials = c.trials_or(100);
        double worst = 0;
        for (size_t t = 0; t < trials; t++) {
            auto g = glue_states(generate_gluable_instance(unit, c.seed(t)));
            worst = std::max({worst, g.abc_residual, g.bcd_residual, g.mi_a_cd, g.mi_ab_d});
        }
        return scalar({{"trials", trials}, {"dims", "1,1,1,1,1,1"}}, worst, Relation::AtMost, c.tol_or(1e-8));
    });
    out.emplace_back("glue.petz_matches_unitary", [unit](const Ctx &c) {
        size_t trials = std::max<size_t>(1, c.trials_or(100) / 2);
        double worst = 0;
        double trace = 0;
        for (size_t t = 0; t < trials; t++) {
            auto r = petz_glue(generate_gluable_instance(unit, c.seed(t)));
            worst = std::max({worst, r.psi_distance, r.glued_distance});
            trace = std::max(trace, r.trace_error);
        }
        auto rep = scalar({{"trials", trials}, {"max_trace_error", trace}}, worst, Relation::AtMost, 1e-7);
        rep.pass = rep.pass && trace <= 1e-9;
        return rep;
    });
    out.emplace_back("glue.b2c1_purity", [unit](const Ctx &c) {
        size_t trials = c.trials_or(100);
        double worst = 0;
        for (size_t t = 0; t < trials; t++) {
            auto planted = planted_gluable_instance(unit, c.seed(t));
            StateVector phi = planted.instance.psi;
            phi.apply_matrix(planted.v_b.adjoint(), unit.b());
            phi.apply_matrix(planted.v_c.adjoint(), unit.c());
            worst = std::max(worst, entanglement_entropy(phi, unit.qubits({2, 3})));
        }
        return scalar({{"trials", trials}}, worst, Relation::Below, 1e-8);
    });
    out.emplace_back("glue.premise_violation_detected", [unit](const Ctx &c) {
        auto r = check_premises(generate_gluable_instance(unit, c.seed(0), {.break_d_entropy = true}));
        bool flagged = std::find(r.failed.begin(), r.failed.end(), "d_entropy") != r.failed.end();
        return scalar({{"failed", r.failed}}, flagged ? 1.0 : 0.0, Relation::Equal, 1);
    });
    return out;
}

std::vector<Check> checks_for(const std::string &suite) {
    if (suite == "symplectic") {
        return symplectic_checks();
    }
    if (suite == "zxcat") {
        return zxcat_checks();
    }
    if (suite == "agsp") {
        return agsp_checks();
    }
    if (suite == "prep") {
        return prep_checks();
    }
    if (suite == "modular") {
        return modular_checks();
    }
    if (suite == "glue") {
        return glue_checks();
    }
    throw UnknownSuite("unknown suite: " + suite);
}

void validate(const SuiteParams &p) {
    if (p.n && (*p.n < 2 || *p.n > max_qubits())) {
        throw std::invalid_argument("--n must be in [2, " + std::to_string(max_qubits()) + "]");
    }
    if (p.trials && *p.trials == 0) {
        throw std::invalid_argument("--trials must be positive");
    }
    if (p.tol && !(*p.tol > 0)) {
        throw std::invalid_argument("--tol must be positive");
    }
}

}  // namespace

Json CheckReport::to_json(bool with_runtime) const {
    Json j;
    j["check"] = check;
    j["params"] = params;
    j["observed"] = observed;
    j["bound"] = bound ? Json(*bound) : Json(nullptr);
    j["pass"] = pass;
    if (with_runtime) {
        j["runtime_ms"] = runtime_ms;
    }
    return j;
}

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = {"symplectic", "zxcat", "agsp", "prep", "modular", "glue"};
    return names;
}

std::vector<CheckReport> run_checks(const std::string &suite, const SuiteParams &params) {
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = suite_names();
    } else {
        checks_for(suite);
        suites = {suite};
    }
    validate(params);
    std::vector<CheckReport> reports;
    uint64_t index = 0;
    for (const auto &s : suites) {
        for (auto &[name, fn] : checks_for(s)) {
            Ctx ctx{params};
            ctx.p.seed = derive_seed(params.seed, index++);
            auto start = std::chrono::steady_clock::now();
            CheckReport rep;
            try {
                rep = fn(ctx);
            } catch (const std::exception &e) {
                rep = CheckReport{};
                rep.params = {{"error", e.what()}};
                rep.observed = nullptr;
                rep.pass = false;
            }
            rep.check = name;
            rep.params["seed"] = params.seed;
            rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                                 .count();
            reports.push_back(std::move(rep));
        }
    }
    return reports;
}

std::string reports_to_string(const std::vector<CheckReport> &reports, bool jsonl, bool with_runtime) {
    if (jsonl) {
        std::string out;
        for (const auto &r : reports) {
            out += r.to_json(with_runtime).dump() + "\n";
        }
        return out;
    }
    Json arr = Json::array();
    for (const auto &r : reports) {
        arr.push_back(r.to_json(with_runtime));
    }
    return arr.dump(2) + "\n";
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        f << text;
        if (!f.flush()) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
}

int exit_code(const std::vector<CheckReport> &reports) {
    for (const auto &r : reports) {
        if (!r.pass) {
            return 1;
        }
    }
    return 0;
}

int run_suite(const std::string &suite, const SuiteParams &params, const std::string &out_path, bool jsonl) {
    std::vector<CheckReport> reports;
    try {
        reports = run_checks(suite, params);
    } catch (const std::invalid_argument &e) {
        std::cerr << "magiclab: " << e.what() << "\n";
        return 2;
    }
    write_output(out_path, reports_to_string(reports, jsonl));
    return exit_code(reports);
}

}  // namespace magiclab

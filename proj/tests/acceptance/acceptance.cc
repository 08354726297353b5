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

// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "magiclab/agsp.h"
#include "magiclab/glue.h"
#include "magiclab/modular.h"
#include "magiclab/prep.h"
#include "magiclab/random.h"
#include "magiclab/stabilizer.h"
#include "magiclab/statevec.h"
#include "magiclab/suites.h"
#include "magiclab/zxcat.h"
#include "oracles.h"

using namespace magiclab;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), f, a);
    return buf;
}

/// Dense stabilizer vector by projecting basis states, one generator at a time.
oracle::Vec projected_vector(const StabilizerState &s) {
    size_t n = s.num_qubits();
    size_t dim = size_t{1} << n;
    std::vector<oracle::Mat> gens;
    for (const auto &g : s.generators()) {
        gens.push_back(oracle::pauli_matrix(g));
    }
    for (size_t i = 0; i < dim; i++) {
        oracle::Vec v = oracle::basis(n, i);
        for (const auto &g : gens) {
            v = (v + g * v) / 2.0;
        }
        if (v.norm() > 0.5 * std::exp2(-static_cast<double>(n) / 2)) {
            return v / v.norm();
        }
    }
    throw std::logic_error("projected_vector: empty projection");
}

PauliString random_pauli(size_t n, Rng &rng) {
    std::string text;
    for (size_t q = 0; q < n; q++) {
        text += "IXYZ"[rng.below(4)];
    }
    return PauliString::from_text(text);
}

Outcome criterion_1() {
    double worst = 0, half = 0;
    size_t nonzero = 0;
    for (size_t t = 0; t < 1000; t++) {
        size_t n = 1 + t % 8;
        auto s1 = random_stabilizer_state(n, derive_seed(101, 2 * t));
        auto s2 = random_stabilizer_state(n, derive_seed(101, 2 * t + 1));
        double dense = std::abs(projected_vector(s1).dot(projected_vector(s2)));
        double fast = stabilizer_overlap(s1, s2);
        worst = std::max(worst, std::abs(dense - fast));
        if (auto l = stabilizer_overlap_log2(s1, s2)) {
            nonzero++;
            half = std::max(half, std::abs(2 * *l - std::round(2 * *l)));
            half = std::max(half, std::abs(std::exp2(*l) - fast));
        }
    }
    return {worst <= 1e-10 && half <= 1e-9 && nonzero > 0,
            "1000 pairs, max |error| " + fmt("%.2e", worst) + ", nonzero " + std::to_string(nonzero) +
                ", half-integer gap " + fmt("%.2e", half)};
}

Outcome criterion_2() {
    Rng rng(202);
    double worst = 0;
    size_t found = 0, draws = 0;
    while (found < 1000 && draws < 100000) {
        size_t n = 1 + draws % 6;
        auto s1 = random_stabilizer_state(n, derive_seed(203, 2 * draws));
        auto s2 = random_stabilizer_state(n, derive_seed(203, 2 * draws + 1));
        auto p = random_pauli(n, rng);
        draws++;
        oracle::Vec v1 = projected_vector(s1);
        oracle::Vec v2 = projected_vector(s2);
        double sandwich = std::abs(v2.dot(oracle::pauli_matrix(p) * v1));
        double overlap = std::abs(v2.dot(v1));
        if (sandwich < 1e-9 || overlap < 1e-9) {
            continue;
        }
        found++;
        worst = std::max({worst, std::abs(sandwich - overlap), std::abs(pauli_sandwich(s2, p, s1) - overlap)});
    }
    return {found == 1000 && worst <= 1e-10,
            std::to_string(found) + " triples with nonzero sandwich and overlap from " + std::to_string(draws) + " draws, max |error| " +
                fmt("%.2e", worst)};
}

Outcome criterion_3() {
    auto r = crossterm_bound_check(10, 303, 500);
    return {r.pass && r.get("violations") == 0,
            "500 trials at n = 10, violations " + fmt("%.0f", r.get("violations")) + ", max ratio " +
                fmt("%.4f", r.observed)};
}

double dense_mi(size_t n) {
    oracle::Vec v = oracle::basis(n, 0) + oracle::plus_power(n);
    v /= v.norm();
    return oracle::entropy_bits(oracle::partial_trace(v, n, {0})) +
           oracle::entropy_bits(oracle::partial_trace(v, n, {1})) -
           oracle::entropy_bits(oracle::partial_trace(v, n, {0, 1}));
}

Outcome criterion_4() {
    long double x = 2 * std::sqrt(2.0L) / 3;
    double limit = static_cast<double>(0.75L * std::log2(3.0L) + 1 -
                                       std::sqrt(2.0L) * std::atanh(x) / (2 * std::log(2.0L)));
    double mi12 = mi_numeric(12);
    double oracle12 = dense_mi(12);
    double least = 1;
    for (size_t n = 2; n <= 12; n++) {
        least = std::min(least, mi_numeric(n));
    }
    bool ok = std::abs(mi12 - limit) <= 0.02 && std::abs(mi12 - oracle12) <= 1e-9 &&
              std::abs(mi_asymptote() - limit) <= 1e-12 && least > 0;
    return {ok, "mi(12) " + fmt("%.6f", mi12) + ", limit " + fmt("%.6f", limit) + ", dense oracle diff " +
                    fmt("%.1e", std::abs(mi12 - oracle12)) + ", min over n=2..12 " + fmt("%.4f", least)};
}

Outcome criterion_5() {
    size_t n = 12;
    LayeredCircuit u(n);
    auto r = cu_correlation_witness(CliffordMap::identity(n), u, 0, 6);
    double tol = std::exp2(1 - static_cast<double>(n) / 2);
    double g = r.get("g_expectation"), gp = r.get("g_prime_expectation"), ggp = r.get("gg_prime_expectation");
    bool ok = std::abs(g - 0.5) <= tol && std::abs(gp - 0.5) <= tol && std::abs(ggp - 0.5) <= tol && r.get("gap") > 0.2;
    return {ok, "<g> " + fmt("%.5f", g) + ", <g'> " + fmt("%.5f", gp) + ", <gg'> " + fmt("%.5f", ggp) + ", gap " +
                    fmt("%.5f", r.get("gap"))};
}

Outcome criterion_6() {
    Rng rng(606);
    size_t violations = 0;
    for (size_t t = 0; t < 200; t++) {
        violations += !uc_sign_witness(random_layered_circuit(10, 1, rng)).pass;
    }
    double f = uc_sign_witness(LayeredCircuit(10)).get("fidelity_i");
    double eq = std::abs(f - std::sqrt(0.5));
    return {violations == 0 && eq <= 1e-10,
            "200 depth-1 circuits, violations " + std::to_string(violations) + ", |F(I) - 1/sqrt2| " +
                fmt("%.1e", eq)};
}

Outcome criterion_7() {
    size_t points = 0, bad_bound = 0, bad_identity = 0, bad_sign = 0;
    double worst_ratio = 0;
    for (size_t n : {16, 64, 256}) {
        size_t mmax = static_cast<size_t>(3 * std::sqrt(static_cast<double>(n)));
        for (size_t m = 1; m <= mmax; m++) {
            auto poly = build_polynomial(n, m);
            auto e = step_error_sup(poly);
            points++;
            worst_ratio = std::max(worst_ratio, e.sup / (2 * std::exp(-2.0 * m / std::sqrt(static_cast<double>(n)))));
            bad_bound += !(e.sup <= 2 * std::exp(-2.0 * m / std::sqrt(static_cast<double>(n))));
            bad_identity += !coeff_sum_identity(poly).exact_equal;
            bad_sign += !signs_alternate(poly);
        }
    }
    double op_gap = 0;
    for (size_t m = 1; m <= 8; m++) {
        op_gap = std::max(op_gap, std::abs(agsp_operator_check(9, m).deviation - step_error_sup(build_polynomial(9, m)).sup));
    }
    bool ok = bad_bound == 0 && bad_identity == 0 && bad_sign == 0 && op_gap == 0;
    return {ok, std::to_string(points) + " grid points, max sup/bound " + fmt("%.4f", worst_ratio) +
                    ", identity failures " + std::to_string(bad_identity) + ", sign failures " +
                    std::to_string(bad_sign) + ", operator gap " + fmt("%.1e", op_gap)};
}

Outcome criterion_8() {
    double sandwich = 1, mps = 1, prob_err = 0, prob_min = 1, accepted_fid = 1;
    size_t clifford_bad = 0, accepted = 0;
    for (size_t n = 1; n <= 12; n++) {
        auto plus = build_zxcat(n, ZxVariant::Plus);
        sandwich = std::min(sandwich, state_fidelity(prepare_sandwich(n), build_zxcat(n, ZxVariant::IPhase)));
        mps = std::min({mps, state_fidelity(mps_contract(n, Boundary::Open), plus),
                        state_fidelity(mps_contract(n, Boundary::Periodic), plus)});
        double p = adaptive_success_probability(n);
        prob_err = std::max(prob_err, std::abs(p - (1 + std::exp2(-static_cast<double>(n) / 2)) / 2));
        prob_min = std::min(prob_min, p);
        if (2 * n <= max_qubits()) {
            for (size_t t = 0; t < 20; t++) {
                auto rec = adaptive_run(n, derive_seed(808, 100 * n + t));
                if (rec.accepted) {
                    accepted++;
                    accepted_fid = std::min(accepted_fid, state_fidelity(rec.post_state, plus));
                }
            }
        }
    }
    for (size_t n = 1; n <= 64; n++) {
        clifford_bad += !verify_global_clifford(n);
    }
    double push = push_relation_residual();
    bool ok = sandwich >= 1 - 1e-12 && clifford_bad == 0 && prob_err <= 1e-12 && prob_min > 0.5 &&
              accepted > 0 && accepted_fid >= 1 - 1e-10 && mps >= 1 - 1e-12 && push_relation_check();
    return {ok, "sandwich " + fmt("%.15f", sandwich) + ", clifford failures " + std::to_string(clifford_bad) +
                    ", adaptive |p - exact| " + fmt("%.1e", prob_err) + ", min p " + fmt("%.4f", prob_min) +
                    ", accepted fidelity " + fmt("%.12f", accepted_fid) + ", mps " + fmt("%.15f", mps) +
                    ", push residual " + fmt("%.1e", push)};
}

Outcome criterion_9() {
    auto data = double_fibonacci();
    auto r = lpu_search(data);
    std::vector<size_t> id = {0, 1, 2, 3}, swap = {0, 2, 1, 3};
    bool only_identity = r.survivors.size() == 1 && r.survivors[0].perm == id;
    bool z_ok = false;
    double swap_dist = 0;
    for (const auto &cs : r.cases) {
        if (cs.perm == id && cs.pattern == id && cs.status == SolveStatus::Unique) {
            z_ok = cs.z.size() == 4;
            for (const auto &z : cs.z) {
                z_ok = z_ok && z == GoldenNumber(1);
            }
        }
        if (cs.perm == swap && cs.st_distance) {
            swap_dist = std::max(swap_dist, *cs.st_distance);
        }
    }
    double off = 0;
    for (const auto &perm : dim_preserving_perms(data.dims)) {
        off = std::max(off, offdiag_modulus_scan(data, perm, 10000, 909));
    }
    Eigen::MatrixXcd s = data.s_matrix();
    Eigen::MatrixXcd st = s * data.t_matrix();
    double rel = std::max((s * s - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff(),
                          (st * st * st - s * s).cwiseAbs().maxCoeff());
    GoldenNumber v = verlinde_dim(data.dims, 2);
    bool ok = only_identity && z_ok && swap_dist > 0.1 && off < 1 && rel <= 1e-9 && v == GoldenNumber(25);
    return {ok, "survivors " + std::to_string(r.survivors.size()) + (only_identity ? " (identity)" : "") +
                    ", z = 1 " + (z_ok ? "yes" : "no") + ", swap distance " + fmt("%.4f", swap_dist) +
                    ", max offdiag " + fmt("%.6f", off) + ", modular residual " + fmt("%.1e", rel) +
                    ", Verlinde(2) " + v.str()};
}

bool is_scalar(const MonomialCandidate &c) {
    for (size_t j = 0; j < c.perm.size(); j++) {
        if (c.perm[j] != j || std::abs(c.z[j] - c.z[0]) > 1e-9) {
            return false;
        }
    }
    return true;
}

Outcome criterion_10() {
    size_t scalar_witnesses = 0;
    for (size_t n : {3, 4}) {
        Eigen::MatrixXcd k = std::polar(1.0, 0.3 * static_cast<double>(n)) *
                             Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n * n), static_cast<Eigen::Index>(n * n));
        scalar_witnesses += scalar_rigidity_trial(n, k, 10000, derive_seed(1010, n)).has_value();
    }
    Rng rng(1011);
    size_t missing = 0;
    for (size_t t = 0; t < 100; t++) {
        size_t n = 3 + t % 2;
        size_t dim = n * n;
        MonomialCandidate cand;
        do {
            cand.perm.resize(dim);
            std::iota(cand.perm.begin(), cand.perm.end(), 0);
            std::shuffle(cand.perm.begin(), cand.perm.end(), rng.engine());
            cand.z.clear();
            for (size_t j = 0; j < dim; j++) {
                cand.z.push_back(std::polar(1.0, 2 * M_PI * rng.uniform()));
            }
        } while (is_scalar(cand));
        missing += !scalar_rigidity_trial(n, cand.matrix(), 1000, derive_seed(1012, t)).has_value();
    }
    return {scalar_witnesses == 0 && missing == 0,
            "scalar K witnesses " + std::to_string(scalar_witnesses) + " over 2 x 10000 conjugations, non-scalar K without witness " +
                std::to_string(missing) + " of 100"};
}

Outcome criterion_11() {
    Rng rng(1111);
    double conclusions = 0, petz = 0, purity = 0;
    size_t premise_failures = 0;
    for (size_t t = 0; t < 100; t++) {
        std::array<size_t, 6> s;
        for (auto &v : s) {
            v = 1 + rng.below(2);
        }
        auto p = Partition::from_sizes(s[0], s[1], s[2], s[3], s[4], s[5]);
        auto planted = planted_gluable_instance(p, derive_seed(1112, t));
        const auto &inst = planted.instance;
        premise_failures += !check_premises(inst).ok();
        auto g = glue_states(inst);
        conclusions = std::max({conclusions, g.abc_residual, g.bcd_residual, g.mi_a_cd, g.mi_ab_d});
        if (p.total() <= 10) {
            auto pr = petz_glue(inst);
            petz = std::max({petz, pr.psi_distance, pr.glued_distance});
        }
        StateVector phi = inst.psi;
        phi.apply_matrix(planted.v_b.adjoint(), p.b());
        phi.apply_matrix(planted.v_c.adjoint(), p.c());
        purity = std::max(purity, entanglement_entropy(phi, p.qubits({2, 3})));
    }
    bool ok = premise_failures == 0 && conclusions <= 1e-8 && petz <= 1e-7 && purity < 1e-8;
    return {ok, "100 instances, premise failures " + std::to_string(premise_failures) + ", max conclusion residual " +
                    fmt("%.1e", conclusions) + ", Petz distance " + fmt("%.1e", petz) + ", S(B2C1) " +
                    fmt("%.1e", purity)};
}

Outcome criterion_12() {
    SuiteParams params;
    auto a = run_checks("all", params);
    auto b = run_checks("all", params);
    bool same = reports_to_string(a, false, false) == reports_to_string(b, false, false);
    int code = exit_code(a);
    return {same && code == 0 && a.size() >= 30,
            std::to_string(a.size()) + " reports, identical " + (same ? "yes" : "no") + ", exit code " +
                std::to_string(code)};
}

}  // namespace

int main() {
    std::vector<std::function<Outcome()>> criteria = {criterion_1, criterion_2,  criterion_3,  criterion_4,
                                                      criterion_5, criterion_6,  criterion_7,  criterion_8,
                                                      criterion_9, criterion_10, criterion_11, criterion_12};
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %zu: %s  %s  [%.2f s]\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}

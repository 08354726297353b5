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

#include "magiclab/zxcat.h"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace magiclab {

namespace {

StateVector plus_vector(size_t n) {
    check_qubit_limit(n, "plus_vector");
    return StateVector::normalized(n, Eigen::VectorXcd::Ones(Eigen::Index{1} << n));
}

uint64_t support_mask(const PauliString &p) { return p.xs().low_word() | p.zs().low_word(); }

uint64_t cone_mask(const LightCone &cone) {
    uint64_t m = 0;
    for (size_t q : cone.qubits) {
        m |= uint64_t{1} << q;
    }
    return m;
}

/// Highest-expectation element of the in-region stabilizer subgroup.
std::optional<std::pair<PauliString, double>> best_in_region(const StabilizerState &s, const StateVector &phi,
                                                             const LightCone &region) {
    auto gens = subgroup_within(s, region.qubits);
    if (gens.empty()) {
        return std::nullopt;
    }
    std::vector<PauliString> candidates;
    if (gens.size() <= 12) {
        candidates = enumerate_group(s.num_qubits(), gens);
        candidates.erase(candidates.begin());
    } else {
        candidates = gens;
    }
    std::optional<std::pair<PauliString, double>> best;
    for (const auto &g : candidates) {
        double e = pauli_expectation(phi, g);
        if (!best || e > best->second) {
            best = {g, e};
        }
    }
    return best;
}

}  // namespace

ZxFamily ZxFamily::make(size_t n, ZxVariant variant) {
    if (n == 0) {
        throw std::invalid_argument("ZxFamily: n must be positive");
    }
    double t = std::exp2(-static_cast<double>(n) / 2);
    return ZxFamily{n, variant, 1 + t, 1 - t};
}

double ZxFamily::normalization() const {
    switch (variant) {
        case ZxVariant::Plus:
            return alpha;
        case ZxVariant::Minus:
            return beta;
        case ZxVariant::IPhase:
            return 1.0;
    }
    return 1.0;
}

StateVector build_zxcat(size_t n, ZxVariant variant) {
    ZxFamily fam = ZxFamily::make(n, variant);
    check_qubit_limit(n, "build_zxcat");
    Complex c = variant == ZxVariant::Plus ? Complex(1) : variant == ZxVariant::Minus ? Complex(-1) : Complex(0, 1);
    Eigen::VectorXcd a = Eigen::VectorXcd::Constant(Eigen::Index{1} << n, c * std::exp2(-static_cast<double>(n) / 2));
    a(0) += 1;
    a /= std::sqrt(2 * fam.normalization());
    return StateVector(n, std::move(a));
}

double mi_asymptote() {
    using boost::multiprecision::cpp_dec_float_50;
    cpp_dec_float_50 two = 2;
    cpp_dec_float_50 three = 3;
    cpp_dec_float_50 ln2 = log(two);
    cpp_dec_float_50 x = 2 * sqrt(two) / 3;
    cpp_dec_float_50 artanh = log((1 + x) / (1 - x)) / 2;
    cpp_dec_float_50 value = cpp_dec_float_50(3) / 4 * log(three) / ln2 + 1 - sqrt(two) * artanh / (2 * ln2);
    return static_cast<double>(value);
}

double mi_numeric(size_t n, size_t i, size_t j) {
    if (n < 2 || i == j || i >= n || j >= n) {
        throw std::invalid_argument("mi_numeric: need n >= 2 and two distinct qubits");
    }
    auto psi = build_zxcat(n, ZxVariant::Plus);
    std::vector<size_t> a = {i};
    std::vector<size_t> b = {j};
    return mutual_information(psi, a, b);
}

double zplus_z_expectation(size_t n) {
    ZxFamily fam = ZxFamily::make(n, ZxVariant::Plus);
    return (1 + std::exp2(1 - static_cast<double>(n) / 2)) / (2 * fam.alpha);
}

std::pair<StateVector, StateVector> clifford_branches(const CliffordMap &c) {
    size_t n = c.num_qubits();
    CliffordMap inv = c.inverse();
    StateVector v1 = to_statevector(apply_clifford(inv, StabilizerState::zero_state(n)));
    StateVector v2 = to_statevector(apply_clifford(inv, StabilizerState::plus_state(n)));
    Complex ip = v1.inner(v2);
    Eigen::VectorXcd a = v2.amplitudes() * (std::conj(ip) / std::abs(ip));
    return {v1, StateVector::normalized(n, std::move(a))};
}

WitnessReport crossterm_bound_check(size_t n, uint64_t seed, size_t trials, size_t max_support) {
    if (max_support == 0 || max_support > n) {
        throw std::invalid_argument("crossterm_bound_check: support size must lie in [1, n]");
    }
    WitnessReport report;
    report.name = "crossterm_bound";
    double max_ratio = 0;
    double max_abs = 0;
    size_t violations = 0;
    double identity_overlap = 0;
    std::vector<size_t> qubits(n);
    for (size_t t = 0; t < trials; t++) {
        Rng rng(derive_seed(seed, t));
        CliffordMap c = random_clifford(n, rng.next());
        if (t == 0) {
            CliffordMap inv = c.inverse();
            identity_overlap = stabilizer_overlap(apply_clifford(inv, StabilizerState::zero_state(n)),
                                                  apply_clifford(inv, StabilizerState::plus_state(n)));
        }
        auto [phi1, phi2] = clifford_branches(c);
        size_t a = 1 + rng.below(max_support);
        std::iota(qubits.begin(), qubits.end(), size_t{0});
        std::shuffle(qubits.begin(), qubits.end(), rng.engine());
        std::vector<size_t> support(qubits.begin(), qubits.begin() + static_cast<std::ptrdiff_t>(a));
        Eigen::MatrixXcd v = random_hermitian_unit(size_t{1} << a, rng);
        StateVector w = phi2;
        w.apply_matrix(v, support);
        double value = std::abs(phi1.inner(w));
        double bound = std::exp2(static_cast<double>(a) - static_cast<double>(n) / 2);
        max_abs = std::max(max_abs, value);
        max_ratio = std::max(max_ratio, value / bound);
        if (value > bound * (1 + 1e-12)) {
            violations++;
        }
    }
    report.set("n", static_cast<double>(n));
    report.set("trials", static_cast<double>(trials));
    report.set("max_support", static_cast<double>(max_support));
    report.set("violations", static_cast<double>(violations));
    report.set("max_abs_crossterm", max_abs);
    report.set("identity_overlap", identity_overlap);
    report.set("identity_overlap_expected", std::exp2(-static_cast<double>(n) / 2));
    report.observed = max_ratio;
    report.bound = 1.0;
    report.pass = violations == 0;
    return report;
}

std::optional<FanoutPlan> adapted_fanout_circuit(const CliffordMap &c) {
    size_t n = c.num_qubits();
    if (n > 16) {
        throw std::length_error("adapted_fanout_circuit: group enumeration limited to 16 qubits");
    }
    StabilizerState s1 = apply_clifford(c.inverse(), StabilizerState::zero_state(n));
    auto group = enumerate_group(n, s1.generators());
    // Smallest-support representative for each distinct support.
    std::vector<std::pair<uint64_t, size_t>> masks;
    for (size_t k = 1; k < group.size(); k++) {
        masks.emplace_back(support_mask(group[k]), k);
    }
    std::sort(masks.begin(), masks.end(), [](const auto &x, const auto &y) {
        int px = std::popcount(x.first);
        int py = std::popcount(y.first);
        return px != py ? px < py : x.first < y.first;
    });
    masks.erase(std::unique(masks.begin(), masks.end(),
                            [](const auto &x, const auto &y) { return x.first == y.first; }),
                masks.end());
    int best_cost = -1;
    std::pair<size_t, size_t> best;
    for (size_t a = 0; a < masks.size(); a++) {
        if (best_cost >= 0 && 2 * std::popcount(masks[a].first) >= best_cost) {
            break;
        }
        for (size_t b = a + 1; b < masks.size(); b++) {
            if (masks[a].first & masks[b].first) {
                continue;
            }
            int cost = std::popcount(masks[a].first) + std::popcount(masks[b].first);
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost;
                best = {masks[a].second, masks[b].second};
            }
            break;
        }
    }
    if (best_cost < 0) {
        return std::nullopt;
    }
    const PauliString &g = group[best.first];
    const PauliString &gp = group[best.second];
    std::vector<std::vector<size_t>> reached = {{g.support().front()}, {gp.support().front()}};
    std::vector<std::vector<size_t>> pending = {g.support(), gp.support()};
    for (auto &p : pending) {
        p.erase(p.begin());
    }
    LayeredCircuit u(n);
    while (!pending[0].empty() || !pending[1].empty()) {
        Layer layer;
        for (size_t t = 0; t < 2; t++) {
            std::vector<size_t> newly;
            for (size_t src : reached[t]) {
                if (pending[t].empty()) {
                    break;
                }
                size_t dst = pending[t].front();
                pending[t].erase(pending[t].begin());
                layer.push_back({{src, dst}, gates::cx()});
                newly.push_back(dst);
            }
            reached[t].insert(reached[t].end(), newly.begin(), newly.end());
        }
        u.add_layer(std::move(layer));
    }
    return FanoutPlan{std::move(u), reached[0].front(), reached[1].front(), g, gp};
}

WitnessReport cu_correlation_witness(const CliffordMap &c, const LayeredCircuit &u, size_t i, size_t j) {
    size_t n = c.num_qubits();
    if (u.num_qubits() != n) {
        throw std::invalid_argument("cu_correlation_witness: size mismatch");
    }
    std::vector<size_t> si = {i};
    std::vector<size_t> sj = {j};
    LightCone cone_i = forward_cone(u, si);
    LightCone cone_j = forward_cone(u, sj);
    if (cone_mask(cone_i) & cone_mask(cone_j)) {
        throw std::invalid_argument("cu_correlation_witness: forward cones of the seeds overlap");
    }
    auto [phi1, phi2] = clifford_branches(c);
    ZxFamily fam = ZxFamily::make(n, ZxVariant::Plus);
    Eigen::VectorXcd a = (phi1.amplitudes() + phi2.amplitudes()) / std::sqrt(2 * fam.alpha);
    StateVector phi = StateVector::normalized(n, std::move(a));
    StabilizerState s1 = apply_clifford(c.inverse(), StabilizerState::zero_state(n));

    WitnessReport report;
    report.name = "cu_correlation";
    report.set("n", static_cast<double>(n));
    report.set("cone_i_size", static_cast<double>(cone_i.size()));
    report.set("cone_j_size", static_cast<double>(cone_j.size()));
    report.bound = 0.1;
    auto gi = best_in_region(s1, phi, cone_i);
    auto gj = best_in_region(s1, phi, cone_j);
    if (!gi || !gj) {
        report.note = "no stabilizer of C^dagger|0^n> inside one of the cones";
        report.pass = false;
        return report;
    }
    double eg = gi->second;
    double egp = gj->second;
    double eggp = pauli_expectation(phi, gi->first * gj->first);
    double gap = std::abs(eggp - eg * egp);
    report.set("g_expectation", eg);
    report.set("g_prime_expectation", egp);
    report.set("gg_prime_expectation", eggp);
    report.set("gap", gap);
    report.set("g_weight", static_cast<double>(gi->first.weight()));
    report.set("g_prime_weight", static_cast<double>(gj->first.weight()));
    report.note = "g = " + gi->first.str() + ", g' = " + gj->first.str();
    report.observed = gap;
    report.pass = gap > *report.bound;
    return report;
}

std::optional<std::pair<size_t, size_t>> disjoint_cone_pair(const LayeredCircuit &u) {
    size_t n = u.num_qubits();
    std::vector<uint64_t> masks(n);
    for (size_t k = 0; k < n; k++) {
        std::vector<size_t> seed = {k};
        LightCone b = backward_cone(u, seed);
        masks[k] = cone_mask(forward_cone(u, b.qubits));
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (!(masks[i] & masks[j])) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

WitnessReport uc_sign_witness(const LayeredCircuit &u) {
    size_t n = u.num_qubits();
    auto pair = disjoint_cone_pair(u);
    if (!pair) {
        throw std::invalid_argument("uc_sign_witness: no two qubits have disjoint cones at this depth");
    }
    LayeredCircuit inv = u.inverse();
    StateVector phi1 = apply_circuit(inv, StateVector(n));
    StateVector phi2 = apply_circuit(inv, plus_vector(n));
    WitnessReport report;
    report.name = "uc_sign";
    report.set("n", static_cast<double>(n));
    report.set("depth", static_cast<double>(u.depth()));
    bool pass = true;
    double slack = 1e300;
    const char *tags[2] = {"i", "j"};
    size_t seeds[2] = {pair->first, pair->second};
    for (size_t t = 0; t < 2; t++) {
        std::vector<size_t> seed = {seeds[t]};
        LightCone b = backward_cone(u, seed);
        LightCone lf = forward_cone(u, b.qubits);
        double f = fidelity(reduced_density(phi1, b.qubits), reduced_density(phi2, b.qubits));
        double bound = std::exp2(-0.5 * static_cast<double>(lf.size()));
        std::string tag = tags[t];
        report.set("seed_" + tag, static_cast<double>(seeds[t]));
        report.set("backward_cone_" + tag, static_cast<double>(b.size()));
        report.set("forward_of_backward_" + tag, static_cast<double>(lf.size()));
        report.set("fidelity_" + tag, f);
        report.set("bound_" + tag, bound);
        pass &= f >= bound - 1e-12;
        if (f - bound < slack) {
            slack = f - bound;
            report.observed = f;
            report.bound = bound;
        }
    }
    report.pass = pass;
    return report;
}

WitnessReport am_gm_report(const LayeredCircuit &u, const std::vector<size_t> &seeds,
                           const std::vector<PauliString> &paulis) {
    size_t n = u.num_qubits();
    size_t m = seeds.size();
    if (paulis.size() != m || m == 0) {
        throw std::invalid_argument("am_gm_report: need one Pauli per seed");
    }
    LayeredCircuit inv = u.inverse();
    StateVector phi1 = apply_circuit(inv, StateVector(n));
    StateVector phi2 = apply_circuit(inv, plus_vector(n));
    WitnessReport report;
    report.name = "am_gm";
    double prod_a = 1;
    double prod_b = 1;
    double sum_a = 0;
    double sum_b = 0;
    bool pass = true;
    bool disjoint = true;
    uint64_t used = 0;
    double min_slack = 1e300;
    Eigen::VectorXcd projected = phi1.amplitudes();
    for (size_t k = 0; k < m; k++) {
        const PauliString &p = paulis[k];
        if (!p.is_hermitian() || p.num_qubits() != n) {
            throw std::invalid_argument("am_gm_report: Paulis must be Hermitian on n qubits");
        }
        std::vector<size_t> seed = {seeds[k]};
        LightCone b = backward_cone(u, seed);
        LightCone lf = forward_cone(u, b.qubits);
        if (support_mask(p) & ~cone_mask(b)) {
            throw std::invalid_argument("am_gm_report: Pauli leaves its backward cone");
        }
        disjoint &= !(used & cone_mask(lf));
        used |= cone_mask(lf);
        double a = (1 + pauli_expectation(phi1, p)) / 2;
        double bb = (1 - pauli_expectation(phi2, p)) / 2;
        double lhs = std::sqrt(std::max(0.0, a * (1 - bb))) + std::sqrt(std::max(0.0, bb * (1 - a)));
        double rhs = std::exp2(-0.5 * static_cast<double>(lf.size()));
        std::string tag = std::to_string(k);
        report.set("a_" + tag, a);
        report.set("b_" + tag, bb);
        report.set("distance_from_one_" + tag, (1 - a) + (1 - bb));
        report.set("measured_fidelity_" + tag, lhs);
        report.set("cone_bound_" + tag, rhs);
        pass &= lhs >= rhs - 1e-12;
        min_slack = std::min(min_slack, lhs - rhs);
        prod_a *= a;
        prod_b *= bb;
        sum_a += a;
        sum_b += bb;
        Eigen::VectorXcd moved = projected;
        apply_pauli(moved, p);
        projected = (projected + moved) / 2.0;
    }
    double md = static_cast<double>(m);
    // <prod (1+P_k)/2>_{phi1} = |prod (1+P_k)/2 phi1|^2 for commuting projectors.
    double joint = projected.squaredNorm();
    report.set("product_a", prod_a);
    report.set("product_b", prod_b);
    report.set("sum_a", sum_a);
    report.set("sum_b", sum_b);
    report.set("joint_projector_expectation", joint);
    report.set("cones_disjoint", disjoint ? 1.0 : 0.0);
    pass &= sum_a >= md * std::pow(prod_a, 1 / md) - 1e-12;
    pass &= sum_b >= md * std::pow(prod_b, 1 / md) - 1e-12;
    if (disjoint) {
        report.set("factorization_residual", std::abs(joint - prod_a));
        pass &= std::abs(joint - prod_a) <= 1e-10;
    }
    report.observed = min_slack;
    report.bound = 0.0;
    report.pass = pass;
    return report;
}

}  // namespace magiclab

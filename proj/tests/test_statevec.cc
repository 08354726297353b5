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

#include <gtest/gtest.h>

#include <cmath>
#include <queue>
#include <set>

#include "magiclab/statevec.h"
#include "oracles.h"

using namespace magiclab;

namespace {

StateVector ghz(size_t n) {
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    a(0) = a(a.size() - 1) = 1 / std::sqrt(2.0);
    return StateVector(n, a);
}

PauliString random_hermitian_pauli(size_t n, Rng &rng) {
    std::string t = rng.coin() ? "-" : "+";
    for (size_t q = 0; q < n; q++) {
        t.push_back("IXYZ"[rng.below(4)]);
    }
    return PauliString::from_text(t);
}

}  // namespace

TEST(StateVector, construction_and_limits) {
    StateVector v(3);
    EXPECT_EQ(v.dim(), 8u);
    EXPECT_EQ(v[0], Complex(1));
    EXPECT_THROW(StateVector(2, Eigen::VectorXcd::Ones(4)), std::invalid_argument);
    size_t old = max_qubits();
    set_max_qubits(4);
    EXPECT_THROW(StateVector(5), std::length_error);
    set_max_qubits(old);
}

TEST(ToStatevector, known_states) {
    auto zero = to_statevector(StabilizerState::zero_state(4));
    EXPECT_NEAR(std::abs(zero[0]), 1.0, 1e-15);
    auto plus = to_statevector(StabilizerState::plus_state(1));
    EXPECT_NEAR(std::abs(plus[0]), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(std::abs(plus[1] - plus[0]), 0.0, 1e-15);
}

TEST(ToStatevector, generators_have_unit_expectation) {
    for (uint64_t seed = 0; seed < 100; seed++) {
        size_t n = 1 + seed % 6;
        auto s = random_stabilizer_state(n, seed);
        oracle::Vec v = to_statevector(s).amplitudes();
        for (const auto &g : s.generators()) {
            EXPECT_NEAR(v.dot(oracle::pauli_matrix(g) * v).real(), 1.0, 1e-10);
        }
    }
}

TEST(ApplyCircuit, basics) {
    LayeredCircuit empty(3);
    Rng rng(1);
    auto v = StateVector::random(3, rng);
    EXPECT_LT((apply_circuit(empty, v).amplitudes() - v.amplitudes()).norm(), 1e-15);

    LayeredCircuit had(1);
    had.add_layer({{{0}, gates::h()}});
    auto plus = apply_circuit(had, StateVector(1));
    EXPECT_NEAR(plus[0].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(plus[1].real(), 1 / std::sqrt(2.0), 1e-15);

    LayeredCircuit bad(2);
    EXPECT_THROW(bad.add_layer({{{0, 1}, gates::cx()}, {{1}, gates::h()}}), std::invalid_argument);
    EXPECT_THROW(bad.add_layer({{{0}, 2.0 * gates::h()}}), std::invalid_argument);
}

TEST(ApplyCircuit, inverse_and_dense_agreement) {
    Rng rng(2);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 2 + trial % 4;
        auto c = random_layered_circuit(n, 1 + trial % 3, rng);
        auto v = StateVector::random(n, rng);
        auto w = apply_circuit(c, v);
        EXPECT_NEAR(w.norm(), 1.0, 1e-12);
        auto back = apply_circuit(c.inverse(), w);
        EXPECT_LT((back.amplitudes() - v.amplitudes()).norm(), 1e-12);

        oracle::Mat u = oracle::Mat::Identity(size_t{1} << n, size_t{1} << n);
        for (const auto &layer : c.layers()) {
            for (const auto &g : layer) {
                if (g.qubits.size() == 1) {
                    u = oracle::embed(n, {{g.qubits[0], g.matrix}}) * u;
                } else {
                    u = oracle::two_qubit(n, g.qubits[0], g.qubits[1], g.matrix) * u;
                }
            }
        }
        EXPECT_LT((u * v.amplitudes() - w.amplitudes()).norm(), 1e-12);
    }
}

TEST(ApplyCircuit, clifford_circuit_matches_dense) {
    for (uint64_t seed = 0; seed < 10; seed++) {
        size_t n = 2 + seed % 4;
        auto g = random_clifford_gates(n, seed);
        auto c = clifford_circuit(n, g);
        auto w = apply_circuit(c, StateVector(n));
        oracle::Vec expected = oracle::clifford_unitary(n, g) * oracle::basis(n, 0);
        EXPECT_LT((expected - w.amplitudes()).norm(), 1e-12);
    }
}

TEST(LightCone, small_cases) {
    LayeredCircuit c(6);
    std::vector<size_t> seed = {2};
    EXPECT_EQ(forward_cone(c, seed).qubits, (std::vector<size_t>{2}));
    c.add_layer({{{0, 1}, gates::cx()}, {{2, 3}, gates::cx()}, {{4, 5}, gates::cx()}});
    EXPECT_EQ(forward_cone(c, seed).qubits, (std::vector<size_t>{2, 3}));
    EXPECT_EQ(backward_cone(c, seed).qubits, (std::vector<size_t>{2, 3}));
    c.add_layer({{{1, 2}, gates::cz()}});
    EXPECT_EQ(forward_cone(c, seed).qubits, (std::vector<size_t>{1, 2, 3}));
    EXPECT_EQ(backward_cone(c, seed).qubits, (std::vector<size_t>{0, 1, 2, 3}));
}

TEST(LightCone, brick_wall_against_reachability) {
    size_t n = 12;
    for (size_t t = 0; t <= 5; t++) {
        LayeredCircuit c(n);
        for (size_t d = 0; d < t; d++) {
            Layer layer;
            for (size_t q = d % 2; q + 1 < n; q += 2) {
                layer.push_back({{q, q + 1}, gates::cz()});
            }
            c.add_layer(layer);
        }
        for (size_t i = 0; i < n; i++) {
            // Reachability over (time, qubit) nodes.
            std::set<size_t> reach = {i};
            for (size_t d = 0; d < t; d++) {
                std::set<size_t> next = reach;
                for (size_t q : reach) {
                    // Layer d couples (p, p+1) for p of the same parity as d.
                    size_t partner = ((q % 2) == (d % 2)) ? q + 1 : q - 1;
                    if (partner < n) {
                        next.insert(partner);
                    }
                }
                reach = next;
            }
            std::vector<size_t> seeds = {i};
            auto cone = forward_cone(c, seeds);
            EXPECT_EQ(cone.qubits, std::vector<size_t>(reach.begin(), reach.end()));
            EXPECT_LE(cone.size(), 2 * t + 1);
        }
    }
}

TEST(LightCone, monotone_and_adjoint) {
    Rng rng(3);
    size_t n = 10;
    auto c = random_layered_circuit(n, 4, rng);
    for (size_t i = 0; i < n; i++) {
        std::vector<size_t> si = {i};
        auto f = forward_cone(c, si);
        for (size_t j = 0; j < n; j++) {
            std::vector<size_t> sj = {j};
            EXPECT_EQ(f.contains(j), backward_cone(c, sj).contains(i));
        }
        LayeredCircuit prefix(n);
        LightCone prev{{i}};
        for (const auto &layer : c.layers()) {
            prefix.add_layer(layer);
            auto cur = forward_cone(prefix, si);
            for (size_t q : prev.qubits) {
                EXPECT_TRUE(cur.contains(q));
            }
            prev = cur;
        }
    }
}

TEST(ReducedDensity, known_cases) {
    auto prod = StateVector::basis(3, 5);
    std::vector<size_t> a = {0, 2};
    EXPECT_NEAR(reduced_density(prod, a).purity(), 1.0, 1e-12);
    auto bell = ghz(2);
    std::vector<size_t> q0 = {0};
    auto rho = reduced_density(bell, q0);
    EXPECT_LT((rho.matrix() - oracle::Mat::Identity(2, 2) / 2.0).norm(), 1e-15);
    std::vector<size_t> too_many(13);
    for (size_t k = 0; k < 13; k++) {
        too_many[k] = k;
    }
    EXPECT_THROW(reduced_density(StateVector(13), too_many), std::length_error);
}

TEST(ReducedDensity, matches_partial_trace_and_schmidt) {
    Rng rng(4);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 2 + trial % 7;
        auto v = StateVector::random(n, rng);
        std::vector<size_t> keep;
        for (size_t q = 0; q < n; q++) {
            if (rng.coin()) {
                keep.push_back(q);
            }
        }
        if (keep.empty()) {
            keep.push_back(n - 1);
        }
        std::shuffle(keep.begin(), keep.end(), rng.engine());
        auto rho = reduced_density(v, keep);
        if (n <= 6) {
            EXPECT_LT((rho.matrix() - oracle::partial_trace(v.amplitudes(), n, keep)).norm(), 1e-12);
        }
        // Schmidt oracle: singular values of the reshaped amplitudes.
        size_t k = keep.size();
        oracle::Mat m = oracle::Mat::Zero(size_t{1} << k, size_t{1} << (n - k));
        uint64_t mask = 0;
        for (size_t q : keep) {
            mask |= uint64_t{1} << q;
        }
        for (uint64_t i = 0; i < v.dim(); i++) {
            uint64_t row = 0;
            for (size_t j = 0; j < k; j++) {
                row |= ((i >> keep[j]) & 1) << j;
            }
            uint64_t col = 0;
            size_t pos = 0;
            for (size_t q = 0; q < n; q++) {
                if (!((mask >> q) & 1)) {
                    col |= ((i >> q) & 1) << pos++;
                }
            }
            m(row, col) = v[i];
        }
        Eigen::JacobiSVD<oracle::Mat> svd(m);
        double purity = svd.singularValues().array().pow(4).sum();
        EXPECT_NEAR(rho.purity(), purity, 1e-12);
    }
}

TEST(Entropy, pure_state_properties) {
    Rng rng(5);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 2 + trial % 7;
        auto v = StateVector::random(n, rng);
        std::vector<size_t> all(n);
        std::iota(all.begin(), all.end(), size_t{0});
        EXPECT_NEAR(entanglement_entropy(v, all), 0.0, 1e-9);
        size_t cut = 1 + rng.below(n - 1);
        std::vector<size_t> a(all.begin(), all.begin() + cut);
        std::vector<size_t> b(all.begin() + cut, all.end());
        EXPECT_NEAR(entanglement_entropy(v, a), entanglement_entropy(v, b), 1e-9);
        EXPECT_NEAR(entanglement_entropy(v, a), reduced_density(v, a).entropy(), 1e-9);
    }
}

TEST(MutualInformation, known_values_and_monotonicity) {
    std::vector<size_t> a = {0};
    std::vector<size_t> b = {1};
    EXPECT_NEAR(mutual_information(StateVector::basis(4, 6), a, b), 0.0, 1e-12);
    EXPECT_NEAR(mutual_information(ghz(2), a, b), 2.0, 1e-12);
    for (size_t n = 3; n <= 8; n++) {
        // GHZ pair marginal is diag(1/2, 0, 0, 1/2): S(a) = S(b) = S(ab) = 1.
        EXPECT_NEAR(mutual_information(ghz(n), a, b), 1.0, 1e-12);
    }
    EXPECT_THROW(mutual_information(ghz(3), a, a), std::invalid_argument);
    Rng rng(6);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 4 + trial % 4;
        auto v = StateVector::random(n, rng);
        std::vector<size_t> aa = {0, 2};
        std::vector<size_t> bb = {1};
        double small = mutual_information(v, a, bb);
        double large = mutual_information(v, aa, bb);
        EXPECT_GE(small, -1e-9);
        EXPECT_LE(small, large + 1e-9);
    }
}

TEST(Fidelity, known_values) {
    std::vector<size_t> q0 = {0};
    auto zero = reduced_density(StateVector(1), q0);
    LayeredCircuit had(1);
    had.add_layer({{{0}, gates::h()}});
    auto plus = reduced_density(apply_circuit(had, StateVector(1)), q0);
    EXPECT_NEAR(fidelity(zero, zero), 1.0, 1e-12);
    EXPECT_NEAR(fidelity(zero, plus), 1 / std::sqrt(2.0), 1e-12);
    oracle::Mat bad(2, 2);
    bad << 1.5, 0, 0, -0.5;
    EXPECT_THROW(fidelity(DensityMatrix(q0, bad), zero), std::invalid_argument);
}

TEST(Fidelity, pure_pairs_and_symmetry) {
    Rng rng(7);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + trial % 4;
        auto a = StateVector::random(n, rng);
        auto b = StateVector::random(n, rng);
        std::vector<size_t> all(n);
        std::iota(all.begin(), all.end(), size_t{0});
        double f = fidelity(reduced_density(a, all), reduced_density(b, all));
        EXPECT_NEAR(f, std::abs(a.inner(b)), 1e-7);
        auto ma = StateVector::random(n + 2, rng);
        auto mb = StateVector::random(n + 2, rng);
        auto ra = reduced_density(ma, all);
        auto rb = reduced_density(mb, all);
        EXPECT_NEAR(fidelity(ra, rb), fidelity(rb, ra), 1e-9);
    }
}

TEST(PauliExpectation, known_and_dense) {
    StateVector zero(1);
    EXPECT_DOUBLE_EQ(pauli_expectation(zero, PauliString::from_text("Z")), 1.0);
    EXPECT_DOUBLE_EQ(pauli_expectation(zero, PauliString::from_text("X")), 0.0);
    EXPECT_THROW(pauli_expectation(zero, PauliString::from_text("iZ")), std::invalid_argument);
    Rng rng(8);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + trial % 6;
        auto v = StateVector::random(n, rng);
        auto p = random_hermitian_pauli(n, rng);
        double dense = v.amplitudes().dot(oracle::pauli_matrix(p) * v.amplitudes()).real();
        double fast = pauli_expectation(v, p);
        EXPECT_NEAR(fast, dense, 1e-12);
        EXPECT_LE(std::abs(fast), 1.0 + 1e-12);
    }
}

TEST(Snapshot, json_round_trip) {
    Rng rng(9);
    auto v = StateVector::random(3, rng);
    auto w = state_from_json(state_to_json(v));
    EXPECT_EQ(w.num_qubits(), 3u);
    EXPECT_LT((w.amplitudes() - v.amplitudes()).norm(), 1e-15);
}

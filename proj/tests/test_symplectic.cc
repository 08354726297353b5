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
#include <set>

#include "magiclab/random.h"
#include "magiclab/stabilizer.h"
#include "oracles.h"

using namespace magiclab;

namespace {

PauliString random_pauli(size_t n, Rng &rng, bool hermitian = false) {
    std::string text = hermitian ? (rng.coin() ? "-" : "+") : std::string("+-i-i").substr(0, 0);
    if (!hermitian) {
        static const char *prefixes[4] = {"+", "+i", "-", "-i"};
        text = prefixes[rng.below(4)];
    }
    for (size_t q = 0; q < n; q++) {
        text.push_back("IXYZ"[rng.below(4)]);
    }
    return PauliString::from_text(text);
}

/// Stabilizer state made by a random number of random gates, so that small
/// and large intersections with other states both occur.
std::pair<StabilizerState, std::vector<CliffordGate>> shallow_state(size_t n, uint64_t seed) {
    auto gates = random_clifford_gates(n, seed);
    Rng rng(seed ^ 0x5555);
    gates.resize(rng.below(gates.size() / 2 + 1));
    StabilizerState s = apply_clifford(CliffordMap::from_gates(n, gates), StabilizerState::zero_state(n));
    return {s, gates};
}

double dense_overlap(const StabilizerState &a, const StabilizerState &b) {
    return std::abs(oracle::stabilizer_vector(a).dot(oracle::stabilizer_vector(b)));
}

}  // namespace

TEST(PauliString, parse_and_print) {
    auto p = PauliString::from_text("-iXIZY");
    EXPECT_EQ(p.num_qubits(), 4u);
    EXPECT_EQ(p.phase(), 3);
    EXPECT_EQ(p.str(), "-iX_ZY");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.support(), (std::vector<size_t>{0, 2, 3}));
    EXPECT_EQ(PauliString::from_text("Z_X"), PauliString::from_text("+ZIX"));
    EXPECT_THROW(PauliString::from_text("XQ"), std::invalid_argument);
}

TEST(PauliString, single_qubit_products) {
    EXPECT_EQ(PauliString::from_text("X") * PauliString::from_text("Z"), PauliString::from_text("-iY"));
    EXPECT_EQ(PauliString::from_text("Z") * PauliString::from_text("X"), PauliString::from_text("iY"));
    EXPECT_EQ(PauliString::from_text("Y") * PauliString::from_text("Y"), PauliString::from_text("I"));
    Rng rng(1);
    for (int k = 0; k < 20; k++) {
        auto p = random_pauli(5, rng);
        EXPECT_EQ(PauliString(5) * p, p);
    }
    EXPECT_THROW(PauliString(2) * PauliString(3), std::invalid_argument);
}

TEST(PauliString, product_matches_dense) {
    Rng rng(2);
    for (int k = 0; k < 100; k++) {
        size_t n = 1 + rng.below(3);
        auto p = random_pauli(n, rng);
        auto q = random_pauli(n, rng);
        auto pq = p * q;
        oracle::Mat expected = oracle::pauli_matrix(p) * oracle::pauli_matrix(q);
        EXPECT_LT((oracle::pauli_matrix(pq) - expected).norm(), 1e-12) << p.str() << " " << q.str();
        EXPECT_LT((oracle::pauli_matrix(pq * pq) - expected * expected).norm(), 1e-12);
        auto r = random_pauli(n, rng);
        EXPECT_EQ((p * q) * r, p * (q * r));
    }
}

TEST(PauliString, commutation_matches_dense) {
    EXPECT_FALSE(commutes(PauliString::from_text("X"), PauliString::from_text("Z")));
    EXPECT_TRUE(commutes(PauliString::from_text("XI"), PauliString::from_text("IZ")));
    Rng rng(3);
    for (int k = 0; k < 100; k++) {
        size_t n = 1 + rng.below(3);
        auto p = random_pauli(n, rng);
        auto q = random_pauli(n, rng);
        oracle::Mat a = oracle::pauli_matrix(p);
        oracle::Mat b = oracle::pauli_matrix(q);
        EXPECT_EQ(commutes(p, q), (a * b - b * a).norm() < 1e-12);
    }
}

TEST(PauliString, elementary_conjugation_matches_dense) {
    Rng rng(4);
    size_t n = 3;
    for (int k = 0; k < 60; k++) {
        auto p = random_pauli(n, rng);
        size_t a = rng.below(n);
        size_t b = (a + 1 + rng.below(n - 1)) % n;
        GateKind kind = static_cast<GateKind>(rng.below(3));
        std::vector<CliffordGate> g = {{kind, a, b}};
        oracle::Mat u = oracle::clifford_unitary(n, g);
        PauliString moved = p;
        if (kind == GateKind::H) {
            moved.conjugate_h(a);
        } else if (kind == GateKind::S) {
            moved.conjugate_s(a);
        } else {
            moved.conjugate_cx(a, b);
        }
        oracle::Mat expected = u * oracle::pauli_matrix(p) * u.adjoint();
        EXPECT_LT((oracle::pauli_matrix(moved) - expected).norm(), 1e-12) << p.str();
    }
}

TEST(StabilizerState, validation) {
    EXPECT_THROW(StabilizerState::from_texts({"X", "Z"}), std::invalid_argument);
    EXPECT_THROW(StabilizerState::from_texts({"XX", "XX"}), std::invalid_argument);
    EXPECT_THROW(StabilizerState::from_texts({"iZ"}), std::invalid_argument);
    EXPECT_THROW(StabilizerState::from_texts({"ZZ"}), std::invalid_argument);
    EXPECT_NO_THROW(StabilizerState::from_texts({"XX", "-YY"}));
}

TEST(StabilizerState, canonical_form_identifies_states) {
    auto a = StabilizerState::from_texts({"XX", "ZZ"});
    auto b = StabilizerState::from_texts({"-YY", "XX"});
    auto c = StabilizerState::from_texts({"XX", "-ZZ"});
    EXPECT_EQ(a, b);
    EXPECT_FALSE(a == c);
    EXPECT_TRUE(a.stabilized_by(PauliString::from_text("-YY")));
    EXPECT_FALSE(a.stabilized_by(PauliString::from_text("YY")));
    EXPECT_FALSE(a.find_element(PauliString::from_text("XI")).has_value());
}

TEST(StabilizerOverlap, small_cases) {
    for (size_t n = 1; n <= 6; n++) {
        EXPECT_DOUBLE_EQ(stabilizer_overlap(StabilizerState::zero_state(n), StabilizerState::zero_state(n)), 1.0);
    }
    double v = stabilizer_overlap(StabilizerState::zero_state(2), StabilizerState::plus_state(2));
    EXPECT_DOUBLE_EQ(v * v, 0.25);
    EXPECT_DOUBLE_EQ(stabilizer_overlap(StabilizerState::from_texts({"Z"}), StabilizerState::from_texts({"-Z"})),
                     0.0);
    EXPECT_EQ(*stabilizer_overlap_log2(StabilizerState::zero_state(300), StabilizerState::plus_state(300)), -150.0);
}

TEST(StabilizerOverlap, ghz_against_statevector) {
    for (size_t n = 2; n <= 8; n++) {
        std::vector<PauliString> gens;
        std::string all_x(n, 'X');
        gens.push_back(PauliString::from_text(all_x));
        for (size_t q = 0; q + 1 < n; q++) {
            std::string zz(n, 'I');
            zz[q] = zz[q + 1] = 'Z';
            gens.push_back(PauliString::from_text(zz));
        }
        StabilizerState ghz(gens);
        oracle::Vec expected = (oracle::basis(n, 0) + oracle::basis(n, (size_t{1} << n) - 1)) / std::sqrt(2.0);
        double dense = std::norm(expected.dot(oracle::basis(n, 0)));
        double fast = stabilizer_overlap(StabilizerState::zero_state(n), ghz);
        EXPECT_NEAR(fast * fast, dense, 1e-12);
        EXPECT_NEAR(fast * fast, 0.5, 1e-12);
    }
}

TEST(StabilizerOverlap, random_pairs_against_statevector) {
    for (uint64_t seed = 0; seed < 150; seed++) {
        size_t n = 1 + seed % 6;
        auto [s1, g1] = shallow_state(n, 2 * seed);
        auto [s2, g2] = shallow_state(n, 2 * seed + 1);
        double fast = stabilizer_overlap(s1, s2);
        EXPECT_NEAR(fast, dense_overlap(s1, s2), 1e-10);
        if (fast > 0) {
            double lg = 2 * std::log2(fast);
            EXPECT_NEAR(lg, std::round(lg), 1e-12);
            EXPECT_GE(lg, -static_cast<double>(n) - 1e-12);
            EXPECT_LE(lg, 1e-12);
        }
    }
}

TEST(PauliSandwich, small_cases) {
    EXPECT_NEAR(pauli_sandwich(StabilizerState::zero_state(1), PauliString::from_text("X"),
                               StabilizerState::plus_state(1)),
                1 / std::sqrt(2.0), 1e-15);
    auto eta = random_stabilizer_state(5, 9);
    for (const auto &g : eta.generators()) {
        EXPECT_DOUBLE_EQ(pauli_sandwich(StabilizerState::zero_state(5), g, eta),
                         stabilizer_overlap(StabilizerState::zero_state(5), eta));
    }
}

TEST(PauliSandwich, random_against_statevector) {
    Rng rng(11);
    int nonzero_cases = 0;
    for (uint64_t seed = 0; seed < 150; seed++) {
        size_t n = 1 + seed % 6;
        auto [s1, g1] = shallow_state(n, 1000 + 2 * seed);
        auto [s2, g2] = shallow_state(n, 1001 + 2 * seed);
        auto p = random_pauli(n, rng);
        double fast = pauli_sandwich(s2, p, s1);
        oracle::Vec v1 = oracle::stabilizer_vector(s1);
        oracle::Vec v2 = oracle::stabilizer_vector(s2);
        double dense = std::abs(v2.dot(oracle::pauli_matrix(p) * v1));
        EXPECT_NEAR(fast, dense, 1e-10);
        double base = stabilizer_overlap(s1, s2);
        if (base > 0 && fast > 0) {
            nonzero_cases++;
            EXPECT_DOUBLE_EQ(fast, base);
        }
    }
    EXPECT_GT(nonzero_cases, 20);
}

TEST(CliffordMap, determinism_and_validity) {
    EXPECT_EQ(random_clifford(6, 42), random_clifford(6, 42));
    EXPECT_FALSE(random_clifford(6, 42) == random_clifford(6, 43));
    for (uint64_t seed = 0; seed < 100; seed++) {
        auto c = random_clifford(8, seed);
        for (size_t i = 0; i < 8; i++) {
            for (size_t j = 0; j < 8; j++) {
                EXPECT_EQ(commutes(c.x_image(i), c.z_image(j)), i != j);
                EXPECT_TRUE(commutes(c.x_image(i), c.x_image(j)));
                EXPECT_TRUE(commutes(c.z_image(i), c.z_image(j)));
            }
        }
    }
    EXPECT_THROW(CliffordMap({PauliString::from_text("X")}, {PauliString::from_text("X")}), std::invalid_argument);
}

TEST(CliffordMap, single_qubit_group_enumeration) {
    // The single-qubit Clifford group mod phase: X -> +-A, Z -> +-B, A != B.
    std::set<std::string> seen;
    for (uint64_t seed = 0; seed < 2000; seed++) {
        auto gates = random_clifford_gates(1, seed);
        auto c = CliffordMap::from_gates(1, gates);
        ASSERT_NE(c.x_image(0).letter(0), c.z_image(0).letter(0));
        ASSERT_NE(c.x_image(0).letter(0), 'I');
        ASSERT_NE(c.z_image(0).letter(0), 'I');
        oracle::Mat u = oracle::clifford_unitary(1, gates);
        EXPECT_LT((u * oracle::letter_matrix('X') * u.adjoint() - oracle::pauli_matrix(c.x_image(0))).norm(), 1e-12);
        EXPECT_LT((u * oracle::letter_matrix('Z') * u.adjoint() - oracle::pauli_matrix(c.z_image(0))).norm(), 1e-12);
        seen.insert(c.x_image(0).str() + c.z_image(0).str());
    }
    EXPECT_EQ(seen.size(), 24u);
}

TEST(CliffordMap, conjugation_matches_dense) {
    Rng rng(5);
    for (uint64_t seed = 0; seed < 20; seed++) {
        size_t n = 1 + seed % 4;
        auto gates = random_clifford_gates(n, seed);
        auto c = CliffordMap::from_gates(n, gates);
        oracle::Mat u = oracle::clifford_unitary(n, gates);
        for (int k = 0; k < 10; k++) {
            auto p = random_pauli(n, rng);
            EXPECT_LT((oracle::pauli_matrix(c.conjugate(p)) - u * oracle::pauli_matrix(p) * u.adjoint()).norm(),
                      1e-10);
        }
        EXPECT_EQ(c.then(c.inverse()), CliffordMap::identity(n));
        EXPECT_EQ(c.inverse().then(c), CliffordMap::identity(n));
    }
}

TEST(ApplyClifford, basic_and_dense) {
    auto s = random_stabilizer_state(4, 3);
    EXPECT_EQ(apply_clifford(CliffordMap::identity(4), s), s);
    std::vector<CliffordGate> hs;
    for (size_t q = 0; q < 5; q++) {
        hs.push_back({GateKind::H, q});
    }
    EXPECT_EQ(apply_clifford(CliffordMap::from_gates(5, hs), StabilizerState::zero_state(5)),
              StabilizerState::plus_state(5));
    for (uint64_t seed = 0; seed < 30; seed++) {
        size_t n = 1 + seed % 6;
        auto gates = random_clifford_gates(n, seed);
        auto out = apply_clifford(CliffordMap::from_gates(n, gates), StabilizerState::zero_state(n));
        oracle::Vec expected = oracle::clifford_unitary(n, gates) * oracle::basis(n, 0);
        EXPECT_NEAR(std::abs(expected.dot(oracle::stabilizer_vector(out))), 1.0, 1e-10);
    }
}

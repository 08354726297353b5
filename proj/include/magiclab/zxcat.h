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

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "magiclab/report.h"
#include "magiclab/stabilizer.h"
#include "magiclab/statevec.h"

namespace magiclab {

enum class ZxVariant {
    /// (|0^n> + |+^n>) / sqrt(2 alpha)
    Plus,
    /// (|0^n> - |+^n>) / sqrt(2 beta)
    Minus,
    /// (|0^n> + i|+^n>) / sqrt(2)
    IPhase,
};

struct ZxFamily {
    size_t n;
    ZxVariant variant;
    /// 1 + 2^{-n/2}
    double alpha;
    /// 1 - 2^{-n/2}
    double beta;

    static ZxFamily make(size_t n, ZxVariant variant);
    /// Squared norm of the unnormalized branch sum divided by two.
    double normalization() const;
};

StateVector build_zxcat(size_t n, ZxVariant variant);

/// Two-qubit mutual information of the plus state in the large-n limit,
/// (3/4) log2 3 + 1 - sqrt(2) artanh(2 sqrt(2)/3) / (2 ln 2), evaluated in
/// 50-digit arithmetic and rounded to double.
double mi_asymptote();
/// I(i : j) of the plus state, in bits.
double mi_numeric(size_t n, size_t i = 0, size_t j = 1);
/// <Z_i> on the plus state, (1 + 2^{1-n/2}) / (2 alpha).
double zplus_z_expectation(size_t n);

/// C^dagger|0^n> + C^dagger|+^n> branch pair of the plus state. The phase of
/// the second branch is fixed so that <phi1|phi2> = 2^{-n/2}, as for the
/// unrotated branches.
std::pair<StateVector, StateVector> clifford_branches(const CliffordMap &c);

/// Random Clifford C, phi1 = C^dagger|0^n>, phi2 = C^dagger|+^n> and a random
/// unit-norm Hermitian V on a random support of size a <= max_support per
/// trial; checks |<phi1|V|phi2>| <= 2^{a - n/2}.
WitnessReport crossterm_bound_check(size_t n, uint64_t seed, size_t trials, size_t max_support = 4);

/// Depth-log circuit of CNOT fan-out trees rooted at seed_i and seed_j whose
/// forward cones are exactly the supports of two disjoint-support stabilizers
/// of C^dagger|0^n>.
struct FanoutPlan {
    LayeredCircuit circuit;
    size_t seed_i;
    size_t seed_j;
    PauliString g;
    PauliString g_prime;
};
/// Searches the full stabilizer group (n <= 20); nullopt when no two
/// nontrivial elements have disjoint supports.
std::optional<FanoutPlan> adapted_fanout_circuit(const CliffordMap &c);

/// Correlation test on phi = C^dagger psi_plus: picks the stabilizers g of
/// C^dagger|0^n> inside L_f(i) and g' inside L_f(j) with largest <g>_phi and
/// reports <g>, <g'>, <g g'> and the gap |<gg'> - <g><g'>|.
WitnessReport cu_correlation_witness(const CliffordMap &c, const LayeredCircuit &u, size_t i, size_t j);

/// First pair i < j whose backward cones have disjoint forward cones.
std::optional<std::pair<size_t, size_t>> disjoint_cone_pair(const LayeredCircuit &u);

/// Fidelity of the marginals of U^dagger|0^n> and U^dagger|+^n> on the
/// backward cones B_i, B_j against 2^{-|L_f(B)|/2}. Throws
/// std::invalid_argument when no pair with disjoint cones exists.
WitnessReport uc_sign_witness(const LayeredCircuit &u);

/// For Paulis P_k supported on B_k = L_b(seed_k), reports a_k = <(1+P_k)/2>
/// on U^dagger|0^n>, b_k = <(1-P_k)/2> on U^dagger|+^n>, their products and
/// sums, the arithmetic-geometric mean inequalities and
/// sqrt(a_k(1-b_k)) + sqrt(b_k(1-a_k)) >= 2^{-|L_f(B_k)|/2}.
WitnessReport am_gm_report(const LayeredCircuit &u, const std::vector<size_t> &seeds,
                           const std::vector<PauliString> &paulis);

}  // namespace magiclab

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

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "magiclab/pauli.h"
#include "magiclab/statevec.h"

namespace magiclab {

/// e^{-i pi/8 Y}, which maps Z to H under conjugation.
Eigen::Matrix2cd sandwich_u();

/// U^{(x)n} (1 + i Z^{(x)n})/sqrt(2) (U^dag)^{(x)n} applied to |0^n>.
StateVector prepare_sandwich(size_t n);

/// C P C^dag for C = e^{i pi/4 Z^{(x)n}}: P if P commutes with Z^{(x)n},
/// otherwise i Z^{(x)n} P.
PauliString global_clifford_conjugate(const PauliString &p);

/// Checks that every X_i and Z_i maps to a Hermitian Pauli string, and for
/// n <= 6 that the images agree with dense conjugation.
bool verify_global_clifford(size_t n);

struct AdaptiveRunRecord {
    /// X-basis outcome of ancilla k, 0 for |+> and 1 for |->.
    std::vector<uint8_t> outcomes;
    /// +1 for even outcome parity.
    int parity = 1;
    /// Normalized data register after the measurement.
    StateVector post_state{1};
    bool accepted = false;
};

/// Data qubits 0..n-1 start in |0>, ancillas n..2n-1 in GHZ. Applies CH from
/// ancilla k to data k, then measures every ancilla in the X basis.
/// Requires 2n <= max_qubits().
AdaptiveRunRecord adaptive_run(size_t n, uint64_t seed);

/// Probability of even parity, summed over all 2^n outcomes of the same
/// protocol. The joint state is kept as data vectors indexed by the ancilla
/// basis strings it is supported on. Requires n <= 12.
double adaptive_success_probability(size_t n);

struct MpsTensor {
    Eigen::Matrix2cd a0;
    Eigen::Matrix2cd a1;
    Eigen::Vector2cd left;
    Eigen::Vector2cd right;

    static MpsTensor zxcat();
    const Eigen::Matrix2cd &operator[](int bit) const { return bit ? a1 : a0; }
};

enum class Boundary { Open, Periodic };

/// Normalized tensor-train state; qubit k carries site k.
StateVector mps_contract(size_t n, Boundary boundary, const MpsTensor &t = MpsTensor::zxcat());

/// Largest entrywise violation of Z A^a Z = A^a and sum_b H_ab A^b = X A^a X.
double push_relation_residual(const MpsTensor &t = MpsTensor::zxcat());
bool push_relation_check(double tol = 1e-12);

struct BellRunRecord {
    /// Per bond k (right leg of site k, left leg of site k+1 mod n), the
    /// measured bits (z, x): z from the right leg after H, x from the left leg.
    std::vector<std::pair<uint8_t, uint8_t>> outcomes;
    /// Sites that received a pushed H on the physical leg.
    std::vector<uint8_t> h_flags;
    bool residual_x = false;
    bool residual_z = false;
    bool accepted = false;
    /// Normalized physical register after the measurements, no corrections.
    StateVector state{1};
};

/// Periodic chain of n three-qubit site states sum A^x_{ab}|x a b>. Physical
/// leg of site k is qubit k, its left and right virtual legs n+2k and n+2k+1.
/// Each bond is Bell measured by CX(right -> left), H(right), Z-basis readout;
/// outcome (z, x) leaves X^x Z^z on the bond. Byproducts are pushed left to
/// right to the closing bond; the run is accepted iff no H was pushed and the
/// residual is the identity. Requires 3n <= max_qubits().
BellRunRecord bell_protocol_run(size_t n, uint64_t seed);

}  // namespace magiclab

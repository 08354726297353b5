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
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "magiclab/statevec.h"

namespace magiclab {

/// Six consecutive qubit blocks A, B1, B2, C1, C2, D (qubit 0 first in A).
struct Partition {
    std::array<size_t, 6> sizes{};

    static Partition from_sizes(size_t a, size_t b1, size_t b2, size_t c1, size_t c2, size_t d);
    size_t total() const;
    /// Qubits of the listed blocks, 0 = A ... 5 = D.
    std::vector<size_t> qubits(std::initializer_list<int> blocks) const;
    std::vector<size_t> a() const { return qubits({0}); }
    std::vector<size_t> b() const { return qubits({1, 2}); }
    std::vector<size_t> c() const { return qubits({3, 4}); }
    std::vector<size_t> d() const { return qubits({5}); }
};

struct PremiseReport {
    /// max |psi_BC - psi'_BC|
    double bc_residual = 0;
    /// I(A:CD) of psi and I(AB:D) of psi', in bits.
    double mi_a_cd = 0;
    double mi_ab_d = 0;
    /// |S(D)_psi - S(D)_psi'|
    double d_entropy_gap = 0;
    std::vector<std::string> failed;
    bool ok() const { return failed.empty(); }
};

struct GluableInstance {
    StateVector psi{1};
    StateVector psi_prime{1};
    Partition partition;
};

/// Also carries what generation used, for tests and diagnostics only.
struct PlantedInstance {
    GluableInstance instance;
    /// psi' differs from psi by w_a on A (and by w_d on D) before V_B V_C.
    Eigen::MatrixXcd w_a;
    Eigen::MatrixXcd v_b;
    Eigen::MatrixXcd v_c;
};

struct GlueOptions {
    /// Product factors and identity V_B, V_C.
    bool product = false;
    /// Replace the C2D factor of psi' by |0...0>, breaking the D entropy match.
    bool break_d_entropy = false;
};

/// psi = V_B V_C |x>_{AB1} |y>_{B2C1} |w>_{C2D} and
/// psi' = V_B V_C (W_A|x>) |y> (W_D|w>), all factors Haar random.
/// Requires every block nonempty and the total within max_qubits().
PlantedInstance planted_gluable_instance(const Partition &p, uint64_t seed, GlueOptions options = {});
GluableInstance generate_gluable_instance(const Partition &p, uint64_t seed, GlueOptions options = {});

PremiseReport check_premises(const GluableInstance &inst, double tol = 1e-8);

/// Thrown by glue_states and petz_glue when premises fail; what() lists them.
class PremiseError : public std::runtime_error {
   public:
    PremiseError(const std::string &what, PremiseReport report)
        : std::runtime_error(what), report_(std::move(report)) {}
    const PremiseReport &report() const { return report_; }

   private:
    PremiseReport report_;
};

struct GlueResult {
    StateVector state{1};
    Eigen::MatrixXcd u_a;
    /// max |Psi_ABC - psi_ABC| and max |Psi_BCD - psi'_BCD|.
    double abc_residual = 0;
    double bcd_residual = 0;
    /// I(A:CD) and I(AB:D) of Psi, in bits.
    double mi_a_cd = 0;
    double mi_ab_d = 0;
    bool conclusions_hold = false;
};

/// Finds U_A with U_A psi'_AB U_A^dag = psi_AB from the two AB marginals alone
/// (polar factor of a generic element of the intertwiner space) and returns
/// Psi = U_A psi'. Throws PremiseError if the premises fail within tol.
GlueResult glue_states(const GluableInstance &inst, double tol = 1e-8);

/// Mixed state on all qubits as sum_k |g_k><g_k|.
struct LowRankState {
    size_t num_qubits = 0;
    std::vector<Eigen::VectorXcd> factors;

    double trace() const;
    /// <v| rho |v>
    double expectation(const Eigen::VectorXcd &v) const;
    /// Frobenius distance to |v><v| for a unit vector v.
    double distance_to_pure(const Eigen::VectorXcd &v) const;
    /// Requires num_qubits <= 12.
    DensityMatrix to_dense() const;
};

/// rho -> psi_AB^{1/2} psi_B^{-1/2} (1_A (x) rho) psi_B^{-1/2} psi_AB^{1/2} with
/// spectral cutoff 1e-10, built from psi.
struct PetzMap {
    Partition partition;
    /// Acts on the A and B qubits; A is the low part of the index.
    Eigen::MatrixXcd kernel;

    static PetzMap from_state(const StateVector &psi, const Partition &p, double cutoff = 1e-10);
    /// Applies the map to Tr_A |v><v|.
    LowRankState apply_to_marginal(const StateVector &v) const;
};

struct PetzResult {
    LowRankState output;
    /// Frobenius distances of P(psi_BCD) to |psi><psi| and of P(psi'_BCD)
    /// to |Psi><Psi|.
    double psi_distance = 0;
    double glued_distance = 0;
    double trace_error = 0;
};

/// Applies the Petz map of psi to psi'_BCD and compares against glue_states.
/// Throws PremiseError if the premises fail.
PetzResult petz_glue(const GluableInstance &inst, double tol = 1e-8);

}  // namespace magiclab

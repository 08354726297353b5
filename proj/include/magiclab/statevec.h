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
#include <span>
#include <string>
#include <vector>

#include "magiclab/linalg.h"
#include "magiclab/pauli.h"
#include "magiclab/stabilizer.h"

namespace magiclab {

/// Largest qubit count accepted by dense routines. Defaults to 14; the
/// MAGICLAB_MAX_N environment variable overrides the default.
size_t max_qubits();
void set_max_qubits(size_t n);
/// Throws std::length_error when n exceeds max_qubits().
void check_qubit_limit(size_t n, const char *what);

/// Largest subsystem for which an explicit density matrix is built.
inline constexpr size_t kMaxDensityQubits = 12;

/// Dense n-qubit state. Qubit q is bit q of the amplitude index.
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(size_t n);
    /// Throws unless `amplitudes` has length 2^n and unit norm within 1e-12.
    StateVector(size_t n, Eigen::VectorXcd amplitudes);
    /// Rescales to unit norm; throws on the zero vector.
    static StateVector normalized(size_t n, Eigen::VectorXcd amplitudes);
    static StateVector basis(size_t n, uint64_t index);
    /// Uniformly random state (normalized complex Gaussian vector).
    static StateVector random(size_t n, Rng &rng);

    size_t num_qubits() const { return n_; }
    size_t dim() const { return static_cast<size_t>(amps_.size()); }
    const Eigen::VectorXcd &amplitudes() const { return amps_; }
    Complex operator[](uint64_t index) const { return amps_(static_cast<Eigen::Index>(index)); }

    /// Applies a 2^k x 2^k matrix to `qubits`; local index bit j is qubits[j].
    /// Non-unitary matrices are allowed here; the norm is not restored.
    void apply_matrix(const Eigen::MatrixXcd &m, std::span<const size_t> qubits);
    void apply_pauli(const PauliString &p);
    void renormalize();

    double norm() const { return amps_.norm(); }
    /// <this|other>.
    Complex inner(const StateVector &other) const;

   private:
    size_t n_;
    Eigen::VectorXcd amps_;
};

/// Applies p to an arbitrary (possibly unnormalized) amplitude vector.
void apply_pauli(Eigen::VectorXcd &amplitudes, const PauliString &p);

/// |<a|b>|^2.
double state_fidelity(const StateVector &a, const StateVector &b);

/// Unit-trace positive operator on an ordered qubit subset; local index bit j
/// is subset[j].
class DensityMatrix {
   public:
    /// Checks Hermiticity and unit trace within 1e-12 (scaled by dimension).
    DensityMatrix(std::vector<size_t> subset, Eigen::MatrixXcd matrix);

    const std::vector<size_t> &subset() const { return subset_; }
    const Eigen::MatrixXcd &matrix() const { return matrix_; }
    size_t num_qubits() const { return subset_.size(); }

    Eigen::VectorXd eigenvalues() const;
    double purity() const;
    double entropy() const;

   private:
    std::vector<size_t> subset_;
    Eigen::MatrixXcd matrix_;
};

struct Gate {
    std::vector<size_t> qubits;
    Eigen::MatrixXcd matrix;
};

using Layer = std::vector<Gate>;

namespace gates {
Eigen::MatrixXcd identity1();
Eigen::MatrixXcd h();
Eigen::MatrixXcd s();
Eigen::MatrixXcd x();
Eigen::MatrixXcd y();
Eigen::MatrixXcd z();
/// exp(-i theta Y / 2).
Eigen::MatrixXcd ry(double theta);
/// Control is the first listed qubit.
Eigen::MatrixXcd cx();
Eigen::MatrixXcd cz();
Eigen::MatrixXcd ch();
}  // namespace gates

/// Sequence of layers, each made of gates with disjoint supports.
class LayeredCircuit {
   public:
    explicit LayeredCircuit(size_t n) : n_(n) {}

    /// Throws if supports overlap, a qubit is out of range or a gate is not
    /// unitary within 1e-12.
    void add_layer(Layer layer);

    size_t num_qubits() const { return n_; }
    size_t depth() const { return layers_.size(); }
    const std::vector<Layer> &layers() const { return layers_; }

    /// Reversed layers of adjoint gates.
    LayeredCircuit inverse() const;

   private:
    size_t n_;
    std::vector<Layer> layers_;
};

/// Each layer pairs up the qubits by a random matching and puts a Haar random
/// two-qubit gate on every pair (a leftover qubit gets a one-qubit gate).
LayeredCircuit random_layered_circuit(size_t n, size_t depth, Rng &rng);
/// Clifford gates packed greedily into layers, order preserved.
LayeredCircuit clifford_circuit(size_t n, const std::vector<CliffordGate> &gates);

StateVector apply_circuit(const LayeredCircuit &c, const StateVector &v);

/// Sorted set of qubits.
struct LightCone {
    std::vector<size_t> qubits;
    bool contains(size_t q) const;
    size_t size() const { return qubits.size(); }
};

LightCone forward_cone(const LayeredCircuit &c, std::span<const size_t> qubits);
LightCone backward_cone(const LayeredCircuit &c, std::span<const size_t> qubits);

StateVector to_statevector(const StabilizerState &s);

DensityMatrix reduced_density(const StateVector &v, std::span<const size_t> subset);
/// Von Neumann entropy in bits of the marginal on `subset`, computed from the
/// smaller of the two Gram matrices.
double entanglement_entropy(const StateVector &v, std::span<const size_t> subset);
double mutual_information(const StateVector &v, std::span<const size_t> a, std::span<const size_t> b);

/// Root fidelity Tr sqrt(sqrt(r1) r2 sqrt(r1)).
double fidelity(const DensityMatrix &r1, const DensityMatrix &r2);

double pauli_expectation(const StateVector &v, const PauliString &p);

/// JSON text {"n": n, "amplitudes": [re0, im0, re1, im1, ...]}.
std::string state_to_json(const StateVector &v);
StateVector state_from_json(const std::string &text);

}  // namespace magiclab

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

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "magiclab/pauli.h"

namespace magiclab {

/// Joint +1 eigenstate of n independent, commuting, Hermitian Pauli strings.
/// The sign of each generator is carried by its phase (0 for +, 2 for -).
class StabilizerState {
   public:
    /// Throws std::invalid_argument unless the generators are Hermitian,
    /// pairwise commuting and independent.
    explicit StabilizerState(std::vector<PauliString> generators);

    static StabilizerState zero_state(size_t n);
    static StabilizerState plus_state(size_t n);
    static StabilizerState from_texts(const std::vector<std::string_view> &texts);

    size_t num_qubits() const { return n_; }
    const std::vector<PauliString> &generators() const { return generators_; }
    /// Generators in reduced row echelon form, pivots taken over X columns
    /// first and then Z columns. Equal states have equal canonical rows.
    const std::vector<PauliString> &canonical() const { return canonical_; }

    /// If the letters of `p` (ignoring its phase) occur in the stabilizer
    /// group, returns the group element carrying them. Otherwise nullopt.
    std::optional<PauliString> find_element(const PauliString &p) const;
    /// True iff p itself, with its sign, stabilizes the state.
    bool stabilized_by(const PauliString &p) const;

    bool operator==(const StabilizerState &other) const { return canonical_ == other.canonical_; }

   private:
    size_t n_ = 0;
    std::vector<PauliString> generators_;
    std::vector<PauliString> canonical_;
    std::vector<size_t> pivots_;
};

/// Generators of the subgroup of stabilizers supported inside `region`.
std::vector<PauliString> subgroup_within(const StabilizerState &s, std::span<const size_t> region);
/// All 2^k products of the given commuting generators, identity first.
/// Throws std::length_error for more than 20 generators.
std::vector<PauliString> enumerate_group(size_t n, const std::vector<PauliString> &generators);

/// Magnitude of the inner product of two stabilizer states: 0 or
/// 2^{(dim(S1 ∩ S2) - n)/2}.
double stabilizer_overlap(const StabilizerState &s1, const StabilizerState &s2);
/// log2 of the nonzero overlap (a half-integer), or nullopt when it vanishes.
std::optional<double> stabilizer_overlap_log2(const StabilizerState &s1, const StabilizerState &s2);
/// |<s2| p |s1>|.
double pauli_sandwich(const StabilizerState &s2, const PauliString &p, const StabilizerState &s1);

enum class GateKind : uint8_t { H, S, CX };

struct CliffordGate {
    GateKind kind;
    size_t q0;
    size_t q1 = 0;
    bool operator==(const CliffordGate &) const = default;
};

/// A Clifford unitary C recorded through the images C X_i C^dagger and
/// C Z_i C^dagger.
class CliffordMap {
   public:
    /// Throws std::invalid_argument unless the images are Hermitian and obey
    /// the single-qubit Pauli commutation relations.
    CliffordMap(std::vector<PauliString> x_images, std::vector<PauliString> z_images);

    static CliffordMap identity(size_t n);
    /// Map of the circuit applying `gates` in order.
    static CliffordMap from_gates(size_t n, const std::vector<CliffordGate> &gates);

    size_t num_qubits() const { return x_images_.size(); }
    const PauliString &x_image(size_t q) const { return x_images_[q]; }
    const PauliString &z_image(size_t q) const { return z_images_[q]; }

    /// C p C^dagger.
    PauliString conjugate(const PauliString &p) const;
    CliffordMap inverse() const;
    /// The map of applying this and then `after`.
    CliffordMap then(const CliffordMap &after) const;

    bool operator==(const CliffordMap &other) const = default;

   private:
    std::vector<PauliString> x_images_;
    std::vector<PauliString> z_images_;
};

/// Random H, S and CX gates, 4n^2 + 16 or 4n^2 + 17 of them (the parity of
/// the count is random too). Composing random gates does not sample the
/// Clifford group uniformly.
std::vector<CliffordGate> random_clifford_gates(size_t n, uint64_t seed);
CliffordMap random_clifford(size_t n, uint64_t seed);

/// Stabilizer state C|s>.
StabilizerState apply_clifford(const CliffordMap &c, const StabilizerState &s);
/// C|0^n> for the random Clifford of `seed`.
StabilizerState random_stabilizer_state(size_t n, uint64_t seed);

}  // namespace magiclab

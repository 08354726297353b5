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
#include <string>
#include <string_view>
#include <vector>

#include "magiclab/bits.h"

namespace magiclab {

/// A Pauli operator i^phase * (sigma_0 (x) sigma_1 (x) ...) where each factor
/// is one of I, X, Y, Z encoded by (x, z) bits: I=(0,0), X=(1,0), Y=(1,1),
/// Z=(0,1). With this letter convention the operator is Hermitian exactly when
/// the phase is even.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);
    PauliString(BitVector xs, BitVector zs, uint8_t phase = 0);

    /// Parses an optional sign prefix ("+", "-", "i", "+i", "-i") followed by
    /// characters from {I, X, Y, Z} ('_' is accepted for I).
    static PauliString from_text(std::string_view text);
    /// Single-qubit letter on `qubit`, identity elsewhere.
    static PauliString single(size_t num_qubits, size_t qubit, char letter);

    std::string str() const;

    size_t num_qubits() const { return xs_.size(); }
    const BitVector &xs() const { return xs_; }
    const BitVector &zs() const { return zs_; }
    uint8_t phase() const { return phase_; }

    bool is_hermitian() const { return (phase_ & 1) == 0; }
    /// +1 or -1 for Hermitian strings. Undefined for odd phase.
    int sign() const { return phase_ == 0 ? 1 : -1; }
    bool is_identity_letters() const { return !xs_.any() && !zs_.any(); }

    char letter(size_t qubit) const;
    size_t weight() const;
    std::vector<size_t> support() const;

    PauliString with_phase(uint8_t phase) const;
    PauliString negated() const { return with_phase(phase_ + 2); }
    /// Same letters with phase 0.
    PauliString unsigned_letters() const { return with_phase(0); }

    /// In-place conjugation P -> G P G^dagger by an elementary Clifford.
    void conjugate_h(size_t q);
    void conjugate_s(size_t q);
    void conjugate_cx(size_t control, size_t target);

    bool operator==(const PauliString &other) const = default;

   private:
    BitVector xs_;
    BitVector zs_;
    uint8_t phase_ = 0;
};

/// Operator product p*q with exact phase.
PauliString pauli_product(const PauliString &p, const PauliString &q);
inline PauliString operator*(const PauliString &p, const PauliString &q) { return pauli_product(p, q); }

/// True iff the symplectic form x_p.z_q + z_p.x_q vanishes over F2.
bool commutes(const PauliString &p, const PauliString &q);

}  // namespace magiclab

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

#include "magiclab/pauli.h"

#include <bit>
#include <stdexcept>

namespace magiclab {

PauliString::PauliString(size_t num_qubits) : xs_(num_qubits), zs_(num_qubits) {}

PauliString::PauliString(BitVector xs, BitVector zs, uint8_t phase)
    : xs_(std::move(xs)), zs_(std::move(zs)), phase_(phase & 3) {
    if (xs_.size() != zs_.size()) {
        throw std::invalid_argument("PauliString: x and z parts differ in length");
    }
}

PauliString PauliString::from_text(std::string_view text) {
    uint8_t phase = 0;
    size_t k = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        phase = text[k] == '-' ? 2 : 0;
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        phase += 1;
        k++;
    }
    PauliString result(text.size() - k);
    for (size_t q = 0; k < text.size(); k++, q++) {
        switch (text[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                result.xs_.set(q, true);
                break;
            case 'Y':
                result.xs_.set(q, true);
                result.zs_.set(q, true);
                break;
            case 'Z':
                result.zs_.set(q, true);
                break;
            default:
                throw std::invalid_argument("PauliString: unexpected character in '" + std::string(text) + "'");
        }
    }
    result.phase_ = phase & 3;
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t qubit, char letter) {
    if (qubit >= num_qubits) {
        throw std::out_of_range("PauliString::single: qubit out of range");
    }
    PauliString result(num_qubits);
    if (letter == 'X' || letter == 'Y') {
        result.xs_.set(qubit, true);
    }
    if (letter == 'Z' || letter == 'Y') {
        result.zs_.set(qubit, true);
    }
    if (letter != 'X' && letter != 'Y' && letter != 'Z' && letter != 'I') {
        throw std::invalid_argument("PauliString::single: bad letter");
    }
    return result;
}

char PauliString::letter(size_t qubit) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[xs_.get(qubit) + 2 * zs_.get(qubit)];
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    out.reserve(out.size() + num_qubits());
    for (size_t q = 0; q < num_qubits(); q++) {
        char c = letter(q);
        out.push_back(c == 'I' ? '_' : c);
    }
    return out;
}

size_t PauliString::weight() const {
    size_t total = 0;
    auto wx = xs_.words();
    auto wz = zs_.words();
    for (size_t w = 0; w < wx.size(); w++) {
        total += std::popcount(wx[w] | wz[w]);
    }
    return total;
}

std::vector<size_t> PauliString::support() const {
    std::vector<size_t> out;
    for (size_t q = 0; q < num_qubits(); q++) {
        if (xs_.get(q) || zs_.get(q)) {
            out.push_back(q);
        }
    }
    return out;
}

PauliString PauliString::with_phase(uint8_t phase) const {
    PauliString result = *this;
    result.phase_ = phase & 3;
    return result;
}

void PauliString::conjugate_h(size_t q) {
    bool x = xs_.get(q);
    bool z = zs_.get(q);
    if (x && z) {
        phase_ = (phase_ + 2) & 3;
    }
    xs_.set(q, z);
    zs_.set(q, x);
}

void PauliString::conjugate_s(size_t q) {
    bool x = xs_.get(q);
    bool z = zs_.get(q);
    if (x && z) {
        phase_ = (phase_ + 2) & 3;
    }
    zs_.set(q, z ^ x);
}

void PauliString::conjugate_cx(size_t control, size_t target) {
    if (control == target) {
        throw std::invalid_argument("conjugate_cx: control equals target");
    }
    bool xc = xs_.get(control);
    bool zc = zs_.get(control);
    bool xt = xs_.get(target);
    bool zt = zs_.get(target);
    if (xc && zt && !(xt ^ zc)) {
        phase_ = (phase_ + 2) & 3;
    }
    xs_.set(target, xt ^ xc);
    zs_.set(control, zc ^ zt);
}

PauliString pauli_product(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("pauli_product: size mismatch");
    }
    int phase = p.phase() + q.phase();
    auto x1 = p.xs().words();
    auto z1 = p.zs().words();
    auto x2 = q.xs().words();
    auto z2 = q.zs().words();
    for (size_t w = 0; w < x1.size(); w++) {
        uint64_t plus = (x1[w] & ~z1[w] & x2[w] & z2[w]) | (x1[w] & z1[w] & ~x2[w] & z2[w]) |
                        (~x1[w] & z1[w] & x2[w] & ~z2[w]);
        uint64_t minus = (x1[w] & z1[w] & x2[w] & ~z2[w]) | (~x1[w] & z1[w] & x2[w] & z2[w]) |
                         (x1[w] & ~z1[w] & ~x2[w] & z2[w]);
        phase += std::popcount(plus) - std::popcount(minus);
    }
    return PauliString(p.xs() ^ q.xs(), p.zs() ^ q.zs(), static_cast<uint8_t>(((phase % 4) + 4) % 4));
}

bool commutes(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("commutes: size mismatch");
    }
    return and_parity(p.xs(), q.zs()) == and_parity(p.zs(), q.xs());
}

}  // namespace magiclab

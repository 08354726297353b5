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

#include "magiclab/stabilizer.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "magiclab/random.h"

namespace magiclab {

namespace {

size_t column_count(size_t n) { return 2 * n; }

bool column_bit(const PauliString &p, size_t col) {
    size_t n = p.num_qubits();
    return col < n ? p.xs().get(col) : p.zs().get(col - n);
}

PauliString identity_string(size_t n) { return PauliString(n); }

void require_same_size(size_t a, size_t b, const char *what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": size mismatch");
    }
}

}  // namespace

StabilizerState::StabilizerState(std::vector<PauliString> generators) : generators_(std::move(generators)) {
    n_ = generators_.size();
    for (size_t i = 0; i < n_; i++) {
        const PauliString &g = generators_[i];
        if (g.num_qubits() != n_) {
            throw std::invalid_argument("StabilizerState: need n generators on n qubits");
        }
        if (!g.is_hermitian()) {
            throw std::invalid_argument("StabilizerState: generator " + g.str() + " is not Hermitian");
        }
        for (size_t j = 0; j < i; j++) {
            if (!commutes(g, generators_[j])) {
                throw std::invalid_argument("StabilizerState: generators " + generators_[j].str() + " and " +
                                            g.str() + " anticommute");
            }
        }
    }

    canonical_ = generators_;
    size_t rank = 0;
    for (size_t col = 0; col < column_count(n_) && rank < n_; col++) {
        size_t found = rank;
        while (found < n_ && !column_bit(canonical_[found], col)) {
            found++;
        }
        if (found == n_) {
            continue;
        }
        std::swap(canonical_[rank], canonical_[found]);
        for (size_t r = 0; r < n_; r++) {
            if (r != rank && column_bit(canonical_[r], col)) {
                canonical_[r] = canonical_[r] * canonical_[rank];
            }
        }
        pivots_.push_back(col);
        rank++;
    }
    if (rank != n_) {
        throw std::invalid_argument("StabilizerState: generators are not independent");
    }
}

StabilizerState StabilizerState::zero_state(size_t n) {
    std::vector<PauliString> gens;
    for (size_t q = 0; q < n; q++) {
        gens.push_back(PauliString::single(n, q, 'Z'));
    }
    return StabilizerState(std::move(gens));
}

StabilizerState StabilizerState::plus_state(size_t n) {
    std::vector<PauliString> gens;
    for (size_t q = 0; q < n; q++) {
        gens.push_back(PauliString::single(n, q, 'X'));
    }
    return StabilizerState(std::move(gens));
}

StabilizerState StabilizerState::from_texts(const std::vector<std::string_view> &texts) {
    std::vector<PauliString> gens;
    for (auto t : texts) {
        gens.push_back(PauliString::from_text(t));
    }
    return StabilizerState(std::move(gens));
}

std::optional<PauliString> StabilizerState::find_element(const PauliString &p) const {
    require_same_size(p.num_qubits(), n_, "find_element");
    PauliString residual = p.unsigned_letters();
    PauliString acc = identity_string(n_);
    for (size_t i = 0; i < n_; i++) {
        if (column_bit(residual, pivots_[i])) {
            residual = residual * canonical_[i];
            acc = acc * canonical_[i];
        }
    }
    if (!residual.is_identity_letters()) {
        return std::nullopt;
    }
    return acc;
}

bool StabilizerState::stabilized_by(const PauliString &p) const {
    auto e = find_element(p);
    return e.has_value() && e->phase() == p.phase();
}

std::optional<double> stabilizer_overlap_log2(const StabilizerState &s1, const StabilizerState &s2) {
    size_t n = s1.num_qubits();
    require_same_size(n, s2.num_qubits(), "stabilizer_overlap");

    // Rows: [x | z | which s1 generators | which s2 generators].
    std::vector<BitVector> rows;
    rows.reserve(2 * n);
    for (size_t side = 0; side < 2; side++) {
        const auto &gens = side == 0 ? s1.generators() : s2.generators();
        for (size_t i = 0; i < n; i++) {
            BitVector row(4 * n);
            for (size_t q = 0; q < n; q++) {
                row.set(q, gens[i].xs().get(q));
                row.set(n + q, gens[i].zs().get(q));
            }
            row.set(2 * n + side * n + i, true);
            rows.push_back(std::move(row));
        }
    }
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n; col++) {
        size_t found = rank;
        while (found < rows.size() && !rows[found].get(col)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r].get(col)) {
                rows[r] ^= rows[rank];
            }
        }
        rank++;
    }

    size_t dim = rows.size() - rank;
    for (size_t r = rank; r < rows.size(); r++) {
        PauliString a = identity_string(n);
        PauliString b = identity_string(n);
        for (size_t i = 0; i < n; i++) {
            if (rows[r].get(2 * n + i)) {
                a = a * s1.generators()[i];
            }
            if (rows[r].get(3 * n + i)) {
                b = b * s2.generators()[i];
            }
        }
        if (a.phase() != b.phase()) {
            return std::nullopt;
        }
    }
    return (static_cast<double>(dim) - static_cast<double>(n)) / 2.0;
}

std::vector<PauliString> subgroup_within(const StabilizerState &s, std::span<const size_t> region) {
    size_t n = s.num_qubits();
    std::vector<bool> inside(n, false);
    for (size_t q : region) {
        if (q >= n) {
            throw std::out_of_range("subgroup_within: qubit out of range");
        }
        inside[q] = true;
    }
    // Rows: [x | z | which generators]; eliminate the columns outside region.
    std::vector<BitVector> rows;
    for (size_t i = 0; i < n; i++) {
        BitVector row(3 * n);
        for (size_t q = 0; q < n; q++) {
            row.set(q, s.generators()[i].xs().get(q));
            row.set(n + q, s.generators()[i].zs().get(q));
        }
        row.set(2 * n + i, true);
        rows.push_back(std::move(row));
    }
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n; col++) {
        if (inside[col % n]) {
            continue;
        }
        size_t found = rank;
        while (found < n && !rows[found].get(col)) {
            found++;
        }
        if (found == n) {
            continue;
        }
        std::swap(rows[rank], rows[found]);
        for (size_t r = 0; r < n; r++) {
            if (r != rank && rows[r].get(col)) {
                rows[r] ^= rows[rank];
            }
        }
        rank++;
    }
    std::vector<PauliString> out;
    for (size_t r = rank; r < n; r++) {
        PauliString acc = identity_string(n);
        for (size_t i = 0; i < n; i++) {
            if (rows[r].get(2 * n + i)) {
                acc = acc * s.generators()[i];
            }
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<PauliString> enumerate_group(size_t n, const std::vector<PauliString> &generators) {
    if (generators.size() > 20) {
        throw std::length_error("enumerate_group: too many generators");
    }
    size_t count = size_t{1} << generators.size();
    std::vector<PauliString> out;
    out.reserve(count);
    out.push_back(identity_string(n));
    // Gray code order: each step multiplies by a single generator.
    for (size_t k = 1; k < count; k++) {
        size_t flip = static_cast<size_t>(std::countr_zero(k));
        out.push_back(out.back() * generators[flip]);
    }
    return out;
}

double stabilizer_overlap(const StabilizerState &s1, const StabilizerState &s2) {
    auto lg = stabilizer_overlap_log2(s1, s2);
    return lg ? std::exp2(*lg) : 0.0;
}

double pauli_sandwich(const StabilizerState &s2, const PauliString &p, const StabilizerState &s1) {
    require_same_size(p.num_qubits(), s1.num_qubits(), "pauli_sandwich");
    std::vector<PauliString> moved = s1.generators();
    for (auto &g : moved) {
        if (!commutes(g, p)) {
            g = g.negated();
        }
    }
    return stabilizer_overlap(StabilizerState(std::move(moved)), s2);
}

CliffordMap::CliffordMap(std::vector<PauliString> x_images, std::vector<PauliString> z_images)
    : x_images_(std::move(x_images)), z_images_(std::move(z_images)) {
    size_t n = x_images_.size();
    if (z_images_.size() != n) {
        throw std::invalid_argument("CliffordMap: image counts differ");
    }
    for (size_t i = 0; i < n; i++) {
        for (const auto *img : {&x_images_[i], &z_images_[i]}) {
            if (img->num_qubits() != n || !img->is_hermitian()) {
                throw std::invalid_argument("CliffordMap: images must be Hermitian n-qubit strings");
            }
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            bool ok = commutes(x_images_[i], z_images_[j]) == (i != j);
            if (j < i) {
                ok &= commutes(x_images_[i], x_images_[j]) && commutes(z_images_[i], z_images_[j]);
            }
            if (!ok) {
                throw std::invalid_argument("CliffordMap: images break the Pauli commutation relations");
            }
        }
    }
}

CliffordMap CliffordMap::identity(size_t n) {
    std::vector<PauliString> xs;
    std::vector<PauliString> zs;
    for (size_t q = 0; q < n; q++) {
        xs.push_back(PauliString::single(n, q, 'X'));
        zs.push_back(PauliString::single(n, q, 'Z'));
    }
    return CliffordMap(std::move(xs), std::move(zs));
}

CliffordMap CliffordMap::from_gates(size_t n, const std::vector<CliffordGate> &gates) {
    CliffordMap result = identity(n);
    for (const auto &g : gates) {
        if (g.q0 >= n || (g.kind == GateKind::CX && (g.q1 >= n || g.q1 == g.q0))) {
            throw std::invalid_argument("CliffordMap::from_gates: bad gate target");
        }
        for (auto *images : {&result.x_images_, &result.z_images_}) {
            for (auto &p : *images) {
                switch (g.kind) {
                    case GateKind::H:
                        p.conjugate_h(g.q0);
                        break;
                    case GateKind::S:
                        p.conjugate_s(g.q0);
                        break;
                    case GateKind::CX:
                        p.conjugate_cx(g.q0, g.q1);
                        break;
                }
            }
        }
    }
    return result;
}

PauliString CliffordMap::conjugate(const PauliString &p) const {
    size_t n = num_qubits();
    require_same_size(p.num_qubits(), n, "CliffordMap::conjugate");
    size_t num_y = 0;
    for (size_t q = 0; q < n; q++) {
        num_y += p.xs().get(q) && p.zs().get(q);
    }
    PauliString acc = identity_string(n).with_phase(static_cast<uint8_t>((p.phase() + num_y) & 3));
    for (size_t q = 0; q < n; q++) {
        if (p.xs().get(q)) {
            acc = acc * x_images_[q];
        }
        if (p.zs().get(q)) {
            acc = acc * z_images_[q];
        }
    }
    return acc;
}

CliffordMap CliffordMap::inverse() const {
    size_t n = num_qubits();
    auto preimage = [&](const PauliString &v) {
        BitVector xs(n);
        BitVector zs(n);
        for (size_t k = 0; k < n; k++) {
            xs.set(k, !commutes(v, z_images_[k]));
            zs.set(k, !commutes(v, x_images_[k]));
        }
        PauliString q(std::move(xs), std::move(zs));
        PauliString forward = conjugate(q);
        return q.with_phase(static_cast<uint8_t>((v.phase() - forward.phase() + 4) & 3));
    };
    std::vector<PauliString> xs;
    std::vector<PauliString> zs;
    for (size_t q = 0; q < n; q++) {
        xs.push_back(preimage(PauliString::single(n, q, 'X')));
        zs.push_back(preimage(PauliString::single(n, q, 'Z')));
    }
    return CliffordMap(std::move(xs), std::move(zs));
}

CliffordMap CliffordMap::then(const CliffordMap &after) const {
    require_same_size(num_qubits(), after.num_qubits(), "CliffordMap::then");
    std::vector<PauliString> xs;
    std::vector<PauliString> zs;
    for (size_t q = 0; q < num_qubits(); q++) {
        xs.push_back(after.conjugate(x_images_[q]));
        zs.push_back(after.conjugate(z_images_[q]));
    }
    return CliffordMap(std::move(xs), std::move(zs));
}

std::vector<CliffordGate> random_clifford_gates(size_t n, uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("random_clifford_gates: n must be positive");
    }
    Rng rng(seed);
    size_t count = 4 * n * n + 16 + rng.below(2);
    std::vector<CliffordGate> gates;
    gates.reserve(count);
    for (size_t k = 0; k < count; k++) {
        size_t choice = rng.below(n >= 2 ? 3 : 2);
        size_t a = rng.below(n);
        if (choice == 0) {
            gates.push_back({GateKind::H, a});
        } else if (choice == 1) {
            gates.push_back({GateKind::S, a});
        } else {
            size_t b = rng.below(n - 1);
            if (b >= a) {
                b++;
            }
            gates.push_back({GateKind::CX, a, b});
        }
    }
    return gates;
}

CliffordMap random_clifford(size_t n, uint64_t seed) { return CliffordMap::from_gates(n, random_clifford_gates(n, seed)); }

StabilizerState apply_clifford(const CliffordMap &c, const StabilizerState &s) {
    require_same_size(c.num_qubits(), s.num_qubits(), "apply_clifford");
    std::vector<PauliString> gens;
    gens.reserve(s.num_qubits());
    for (const auto &g : s.generators()) {
        gens.push_back(c.conjugate(g));
    }
    return StabilizerState(std::move(gens));
}

StabilizerState random_stabilizer_state(size_t n, uint64_t seed) {
    return apply_clifford(random_clifford(n, seed), StabilizerState::zero_state(n));
}

}  // namespace magiclab

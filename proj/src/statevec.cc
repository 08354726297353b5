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

#include "magiclab/statevec.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace magiclab {

namespace {

size_t g_max_qubits = 0;

size_t default_max_qubits() {
    if (const char *env = std::getenv("MAGICLAB_MAX_N")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0 && v <= 30) {
            return static_cast<size_t>(v);
        }
    }
    return 14;
}

uint64_t gather_bits(uint64_t index, std::span<const size_t> qubits) {
    uint64_t out = 0;
    for (size_t j = 0; j < qubits.size(); j++) {
        out |= ((index >> qubits[j]) & 1) << j;
    }
    return out;
}

uint64_t qubit_mask(std::span<const size_t> qubits) {
    uint64_t mask = 0;
    for (size_t q : qubits) {
        mask |= uint64_t{1} << q;
    }
    return mask;
}

std::vector<size_t> complement(size_t n, std::span<const size_t> subset) {
    uint64_t mask = qubit_mask(subset);
    std::vector<size_t> out;
    for (size_t q = 0; q < n; q++) {
        if (!((mask >> q) & 1)) {
            out.push_back(q);
        }
    }
    return out;
}

void check_subset(size_t n, std::span<const size_t> subset, const char *what) {
    uint64_t seen = 0;
    for (size_t q : subset) {
        if (q >= n || ((seen >> q) & 1)) {
            throw std::invalid_argument(std::string(what) + ": bad qubit subset");
        }
        seen |= uint64_t{1} << q;
    }
}

/// Amplitudes arranged as a matrix with rows indexed by `subset` and columns
/// by the remaining qubits.
Eigen::MatrixXcd split_matrix(const StateVector &v, std::span<const size_t> subset) {
    auto rest = complement(v.num_qubits(), subset);
    Eigen::MatrixXcd m(Eigen::Index{1} << subset.size(), Eigen::Index{1} << rest.size());
    for (uint64_t i = 0; i < v.dim(); i++) {
        m(gather_bits(i, subset), gather_bits(i, rest)) = v[i];
    }
    return m;
}

}  // namespace

size_t max_qubits() {
    if (g_max_qubits == 0) {
        g_max_qubits = default_max_qubits();
    }
    return g_max_qubits;
}

void set_max_qubits(size_t n) { g_max_qubits = n; }

void check_qubit_limit(size_t n, const char *what) {
    if (n > max_qubits()) {
        throw std::length_error(std::string(what) + ": " + std::to_string(n) + " qubits exceeds the limit of " +
                                std::to_string(max_qubits()));
    }
}

StateVector::StateVector(size_t n) : n_(n) {
    check_qubit_limit(n, "StateVector");
    amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    amps_(0) = 1;
}

StateVector::StateVector(size_t n, Eigen::VectorXcd amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    check_qubit_limit(n, "StateVector");
    if (amps_.size() != (Eigen::Index{1} << n)) {
        throw std::invalid_argument("StateVector: amplitude count is not 2^n");
    }
    if (std::abs(amps_.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("StateVector: amplitudes are not normalized");
    }
}

StateVector StateVector::normalized(size_t n, Eigen::VectorXcd amplitudes) {
    double norm = amplitudes.norm();
    if (!(norm > 0)) {
        throw std::invalid_argument("StateVector::normalized: zero vector");
    }
    amplitudes /= norm;
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(size_t n, uint64_t index) {
    StateVector v(n);
    if (index >= v.dim()) {
        throw std::out_of_range("StateVector::basis: index out of range");
    }
    v.amps_(0) = 0;
    v.amps_(static_cast<Eigen::Index>(index)) = 1;
    return v;
}

StateVector StateVector::random(size_t n, Rng &rng) {
    check_qubit_limit(n, "StateVector::random");
    Eigen::VectorXcd a(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < a.size(); i++) {
        a(i) = Complex(rng.normal(), rng.normal());
    }
    return normalized(n, std::move(a));
}

void StateVector::apply_matrix(const Eigen::MatrixXcd &m, std::span<const size_t> qubits) {
    check_subset(n_, qubits, "apply_matrix");
    size_t k = qubits.size();
    Eigen::Index local = Eigen::Index{1} << k;
    if (m.rows() != local || m.cols() != local) {
        throw std::invalid_argument("apply_matrix: matrix size does not match qubit count");
    }
    uint64_t mask = qubit_mask(qubits);
    std::vector<uint64_t> offsets(local);
    for (Eigen::Index j = 0; j < local; j++) {
        uint64_t off = 0;
        for (size_t b = 0; b < k; b++) {
            if ((j >> b) & 1) {
                off |= uint64_t{1} << qubits[b];
            }
        }
        offsets[j] = off;
    }
    Eigen::VectorXcd in(local);
    Eigen::VectorXcd out(local);
    for (uint64_t base = 0; base < dim(); base++) {
        if (base & mask) {
            continue;
        }
        for (Eigen::Index j = 0; j < local; j++) {
            in(j) = amps_(base | offsets[j]);
        }
        out.noalias() = m * in;
        for (Eigen::Index j = 0; j < local; j++) {
            amps_(base | offsets[j]) = out(j);
        }
    }
}

void apply_pauli(Eigen::VectorXcd &amplitudes, const PauliString &p) {
    if (amplitudes.size() != (Eigen::Index{1} << p.num_qubits())) {
        throw std::invalid_argument("apply_pauli: size mismatch");
    }
    uint64_t x = p.xs().low_word();
    uint64_t z = p.zs().low_word();
    static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex base = kPowers[(p.phase() + std::popcount(x & z)) & 3];
    Eigen::VectorXcd out(amplitudes.size());
    for (uint64_t b = 0; b < static_cast<uint64_t>(amplitudes.size()); b++) {
        Complex a = amplitudes(b) * base;
        out(b ^ x) = (std::popcount(z & b) & 1) ? -a : a;
    }
    amplitudes = std::move(out);
}

void StateVector::apply_pauli(const PauliString &p) { magiclab::apply_pauli(amps_, p); }

void StateVector::renormalize() {
    double norm = amps_.norm();
    if (!(norm > 0)) {
        throw std::runtime_error("renormalize: zero vector");
    }
    amps_ /= norm;
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("inner: size mismatch");
    }
    return amps_.dot(other.amps_);
}

double state_fidelity(const StateVector &a, const StateVector &b) { return std::norm(a.inner(b)); }

DensityMatrix::DensityMatrix(std::vector<size_t> subset, Eigen::MatrixXcd matrix)
    : subset_(std::move(subset)), matrix_(std::move(matrix)) {
    Eigen::Index d = Eigen::Index{1} << subset_.size();
    if (matrix_.rows() != d || matrix_.cols() != d) {
        throw std::invalid_argument("DensityMatrix: shape does not match subset");
    }
    if (!is_hermitian(matrix_, 1e-12)) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - Complex(1.0)) > 1e-10) {
        throw std::invalid_argument("DensityMatrix: trace is not one");
    }
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix_, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

double DensityMatrix::entropy() const { return entropy_bits(eigenvalues()); }

namespace gates {
Eigen::MatrixXcd identity1() { return Eigen::MatrixXcd::Identity(2, 2); }
Eigen::MatrixXcd h() {
    Eigen::MatrixXcd m(2, 2);
    m << 1, 1, 1, -1;
    return m / std::sqrt(2.0);
}
Eigen::MatrixXcd s() {
    Eigen::MatrixXcd m(2, 2);
    m << 1, 0, 0, Complex(0, 1);
    return m;
}
Eigen::MatrixXcd x() {
    Eigen::MatrixXcd m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
Eigen::MatrixXcd y() {
    Eigen::MatrixXcd m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}
Eigen::MatrixXcd z() {
    Eigen::MatrixXcd m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}
Eigen::MatrixXcd ry(double theta) {
    Eigen::MatrixXcd m(2, 2);
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    m << c, -s, s, c;
    return m;
}
Eigen::MatrixXcd cx() {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 0) = m(2, 2) = 1;
    m(3, 1) = m(1, 3) = 1;
    return m;
}
Eigen::MatrixXcd cz() {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
    m(3, 3) = -1;
    return m;
}
Eigen::MatrixXcd ch() {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 0) = m(2, 2) = 1;
    double r = 1 / std::sqrt(2.0);
    m(1, 1) = r;
    m(1, 3) = r;
    m(3, 1) = r;
    m(3, 3) = -r;
    return m;
}
}  // namespace gates

void LayeredCircuit::add_layer(Layer layer) {
    uint64_t used = 0;
    for (const auto &g : layer) {
        if (g.qubits.empty() || g.qubits.size() > 2) {
            throw std::invalid_argument("LayeredCircuit: gates act on one or two qubits");
        }
        for (size_t q : g.qubits) {
            if (q >= n_ || ((used >> q) & 1)) {
                throw std::invalid_argument("LayeredCircuit: gate supports overlap or leave the register");
            }
            used |= uint64_t{1} << q;
        }
        Eigen::Index d = Eigen::Index{1} << g.qubits.size();
        if (g.matrix.rows() != d || !is_unitary(g.matrix, 1e-12)) {
            throw std::invalid_argument("LayeredCircuit: gate is not a unitary of matching size");
        }
    }
    layers_.push_back(std::move(layer));
}

LayeredCircuit LayeredCircuit::inverse() const {
    LayeredCircuit out(n_);
    for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
        Layer layer;
        for (const auto &g : *it) {
            layer.push_back({g.qubits, g.matrix.adjoint()});
        }
        out.layers_.push_back(std::move(layer));
    }
    return out;
}

LayeredCircuit random_layered_circuit(size_t n, size_t depth, Rng &rng) {
    LayeredCircuit c(n);
    std::vector<size_t> order(n);
    for (size_t d = 0; d < depth; d++) {
        std::iota(order.begin(), order.end(), size_t{0});
        std::shuffle(order.begin(), order.end(), rng.engine());
        Layer layer;
        size_t k = 0;
        for (; k + 1 < n; k += 2) {
            layer.push_back({{order[k], order[k + 1]}, random_unitary(4, rng)});
        }
        if (k < n) {
            layer.push_back({{order[k]}, random_unitary(2, rng)});
        }
        c.add_layer(std::move(layer));
    }
    return c;
}

LayeredCircuit clifford_circuit(size_t n, const std::vector<CliffordGate> &gate_list) {
    LayeredCircuit c(n);
    Layer layer;
    uint64_t used = 0;
    for (const auto &g : gate_list) {
        uint64_t touch = uint64_t{1} << g.q0;
        if (g.kind == GateKind::CX) {
            touch |= uint64_t{1} << g.q1;
        }
        if (used & touch) {
            c.add_layer(std::move(layer));
            layer = {};
            used = 0;
        }
        used |= touch;
        switch (g.kind) {
            case GateKind::H:
                layer.push_back({{g.q0}, gates::h()});
                break;
            case GateKind::S:
                layer.push_back({{g.q0}, gates::s()});
                break;
            case GateKind::CX:
                layer.push_back({{g.q0, g.q1}, gates::cx()});
                break;
        }
    }
    if (!layer.empty()) {
        c.add_layer(std::move(layer));
    }
    return c;
}

StateVector apply_circuit(const LayeredCircuit &c, const StateVector &v) {
    if (c.num_qubits() != v.num_qubits()) {
        throw std::invalid_argument("apply_circuit: size mismatch");
    }
    StateVector out = v;
    for (const auto &layer : c.layers()) {
        for (const auto &g : layer) {
            out.apply_matrix(g.matrix, g.qubits);
        }
    }
    return out;
}

bool LightCone::contains(size_t q) const { return std::binary_search(qubits.begin(), qubits.end(), q); }

namespace {

template <typename It>
LightCone grow_cone(size_t n, It begin, It end, std::span<const size_t> seeds) {
    std::vector<bool> in(n, false);
    for (size_t q : seeds) {
        if (q >= n) {
            throw std::out_of_range("light cone: seed qubit out of range");
        }
        in[q] = true;
    }
    for (It it = begin; it != end; ++it) {
        for (const auto &g : *it) {
            bool hit = false;
            for (size_t q : g.qubits) {
                hit |= in[q];
            }
            if (hit) {
                for (size_t q : g.qubits) {
                    in[q] = true;
                }
            }
        }
    }
    LightCone cone;
    for (size_t q = 0; q < n; q++) {
        if (in[q]) {
            cone.qubits.push_back(q);
        }
    }
    return cone;
}

}  // namespace

LightCone forward_cone(const LayeredCircuit &c, std::span<const size_t> qubits) {
    return grow_cone(c.num_qubits(), c.layers().begin(), c.layers().end(), qubits);
}

LightCone backward_cone(const LayeredCircuit &c, std::span<const size_t> qubits) {
    return grow_cone(c.num_qubits(), c.layers().rbegin(), c.layers().rend(), qubits);
}

StateVector to_statevector(const StabilizerState &s) {
    size_t n = s.num_qubits();
    check_qubit_limit(n, "to_statevector");
    // Rows of the canonical form with no X part fix the parities z.b of the
    // support; pick the solution with zeros on the free positions.
    uint64_t b = 0;
    for (const auto &row : s.canonical()) {
        if (row.xs().any()) {
            continue;
        }
        if (row.phase() == 2) {
            uint64_t z = row.zs().low_word();
            b |= z & (~z + 1);
        }
    }
    StateVector v = StateVector::basis(n, b);
    for (const auto &g : s.generators()) {
        StateVector gv = v;
        gv.apply_pauli(g);
        Eigen::VectorXcd sum = (v.amplitudes() + gv.amplitudes()) / 2.0;
        v = StateVector::normalized(n, std::move(sum));
    }
    return v;
}

DensityMatrix reduced_density(const StateVector &v, std::span<const size_t> subset) {
    check_subset(v.num_qubits(), subset, "reduced_density");
    if (subset.size() > kMaxDensityQubits) {
        throw std::length_error("reduced_density: subset larger than 12 qubits");
    }
    Eigen::MatrixXcd m = split_matrix(v, subset);
    Eigen::MatrixXcd rho = m * m.adjoint();
    rho = (rho + rho.adjoint()) / 2.0;
    return DensityMatrix(std::vector<size_t>(subset.begin(), subset.end()), std::move(rho));
}

double entanglement_entropy(const StateVector &v, std::span<const size_t> subset) {
    check_subset(v.num_qubits(), subset, "entanglement_entropy");
    Eigen::MatrixXcd m = split_matrix(v, subset);
    Eigen::MatrixXcd gram = m.rows() <= m.cols() ? Eigen::MatrixXcd(m * m.adjoint())
                                                 : Eigen::MatrixXcd(m.adjoint() * m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
    return entropy_bits(es.eigenvalues());
}

double mutual_information(const StateVector &v, std::span<const size_t> a, std::span<const size_t> b) {
    std::vector<size_t> ab(a.begin(), a.end());
    ab.insert(ab.end(), b.begin(), b.end());
    check_subset(v.num_qubits(), ab, "mutual_information");
    return entanglement_entropy(v, a) + entanglement_entropy(v, b) - entanglement_entropy(v, ab);
}

double fidelity(const DensityMatrix &r1, const DensityMatrix &r2) {
    if (r1.subset() != r2.subset()) {
        throw std::invalid_argument("fidelity: density matrices live on different subsets");
    }
    for (const auto *r : {&r1, &r2}) {
        if (r->eigenvalues().minCoeff() < -1e-10) {
            throw std::invalid_argument("fidelity: input is not positive semidefinite");
        }
    }
    Eigen::MatrixXcd m = psd_sqrt(r1.matrix()) * psd_sqrt(r2.matrix());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return std::min(1.0, svd.singularValues().sum());
}

double pauli_expectation(const StateVector &v, const PauliString &p) {
    if (!p.is_hermitian()) {
        throw std::invalid_argument("pauli_expectation: Pauli string is not Hermitian");
    }
    StateVector pv = v;
    pv.apply_pauli(p);
    return v.inner(pv).real();
}

std::string state_to_json(const StateVector &v) {
    nlohmann::ordered_json j;
    j["n"] = v.num_qubits();
    std::vector<double> flat;
    flat.reserve(2 * v.dim());
    for (uint64_t i = 0; i < v.dim(); i++) {
        flat.push_back(v[i].real());
        flat.push_back(v[i].imag());
    }
    j["amplitudes"] = std::move(flat);
    return j.dump();
}

StateVector state_from_json(const std::string &text) {
    auto j = nlohmann::json::parse(text);
    size_t n = j.at("n").get<size_t>();
    auto flat = j.at("amplitudes").get<std::vector<double>>();
    if (flat.size() != (size_t{2} << n)) {
        throw std::invalid_argument("state_from_json: expected 2^(n+1) numbers");
    }
    Eigen::VectorXcd a(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < a.size(); i++) {
        a(i) = Complex(flat[2 * i], flat[2 * i + 1]);
    }
    return StateVector(n, std::move(a));
}

}  // namespace magiclab

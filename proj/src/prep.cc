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

#include "magiclab/prep.h"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "magiclab/random.h"
#include "magiclab/zxcat.h"

namespace magiclab {

namespace {

const double kSqrtHalf = 1 / std::sqrt(2.0);

/// Index drawn from the Born distribution of v.
uint64_t sample_index(const StateVector &v, Rng &rng) {
    double r = rng.uniform() * v.amplitudes().squaredNorm();
    double acc = 0;
    for (uint64_t i = 0; i < v.dim(); i++) {
        acc += std::norm(v[i]);
        if (r < acc) {
            return i;
        }
    }
    for (uint64_t i = v.dim(); i-- > 0;) {
        if (std::norm(v[i]) > 0) {
            return i;
        }
    }
    return 0;
}

void apply_single(Eigen::VectorXcd &v, size_t q, const Eigen::MatrixXcd &m) {
    uint64_t bit = uint64_t{1} << q;
    for (Eigen::Index i = 0; i < v.size(); i++) {
        if (i & bit) {
            continue;
        }
        Complex a = v(i);
        Complex b = v(i | bit);
        v(i) = m(0, 0) * a + m(0, 1) * b;
        v(i | bit) = m(1, 0) * a + m(1, 1) * b;
    }
}

Eigen::Matrix2cd pauli2(char c) {
    Eigen::Matrix2cd m;
    switch (c) {
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            m.setIdentity();
    }
    return m;
}

Eigen::MatrixXcd dense_pauli(const PauliString &p) {
    size_t n = p.num_qubits();
    Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd out(dim, dim);
    for (Eigen::Index j = 0; j < dim; j++) {
        Eigen::VectorXcd col = Eigen::VectorXcd::Zero(dim);
        col(j) = 1;
        apply_pauli(col, p);
        out.col(j) = col;
    }
    return out;
}

}  // namespace

Eigen::Matrix2cd sandwich_u() {
    double c = std::cos(M_PI / 8);
    double s = std::sin(M_PI / 8);
    Eigen::Matrix2cd u;
    u << c, -s, s, c;
    return u;
}

StateVector prepare_sandwich(size_t n) {
    if (n == 0) {
        throw std::invalid_argument("prepare_sandwich: n must be positive");
    }
    check_qubit_limit(n, "prepare_sandwich");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    v(0) = 1;
    Eigen::Matrix2cd u = sandwich_u();
    Eigen::Matrix2cd ud = u.adjoint();
    for (size_t q = 0; q < n; q++) {
        apply_single(v, q, ud);
    }
    const Complex even(kSqrtHalf, kSqrtHalf);
    const Complex odd(kSqrtHalf, -kSqrtHalf);
    for (Eigen::Index i = 0; i < v.size(); i++) {
        v(i) *= (std::popcount(static_cast<uint64_t>(i)) & 1) ? odd : even;
    }
    for (size_t q = 0; q < n; q++) {
        apply_single(v, q, u);
    }
    return StateVector::normalized(n, std::move(v));
}

PauliString global_clifford_conjugate(const PauliString &p) {
    size_t n = p.num_qubits();
    PauliString zall(n);
    for (size_t q = 0; q < n; q++) {
        zall = zall * PauliString::single(n, q, 'Z');
    }
    if (commutes(p, zall)) {
        return p;
    }
    return (zall * p).with_phase((zall * p).phase() + 1);
}

bool verify_global_clifford(size_t n) {
    if (n == 0) {
        return false;
    }
    Eigen::VectorXcd diag;
    if (n <= 6) {
        Eigen::Index dim = Eigen::Index{1} << n;
        diag.resize(dim);
        for (Eigen::Index i = 0; i < dim; i++) {
            bool odd = std::popcount(static_cast<uint64_t>(i)) & 1;
            diag(i) = Complex(kSqrtHalf, odd ? -kSqrtHalf : kSqrtHalf);
        }
    }
    for (size_t q = 0; q < n; q++) {
        for (char letter : {'X', 'Z'}) {
            PauliString p = PauliString::single(n, q, letter);
            PauliString image = global_clifford_conjugate(p);
            if (!image.is_hermitian()) {
                return false;
            }
            if (n <= 6) {
                Eigen::MatrixXcd c = diag.asDiagonal();
                Eigen::MatrixXcd lhs = c * dense_pauli(p) * c.adjoint();
                if ((lhs - dense_pauli(image)).cwiseAbs().maxCoeff() > 1e-12) {
                    return false;
                }
            }
        }
    }
    return true;
}

AdaptiveRunRecord adaptive_run(size_t n, uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("adaptive_run: n must be positive");
    }
    check_qubit_limit(2 * n, "adaptive_run");
    StateVector v(2 * n);
    std::vector<size_t> q1(1);
    std::vector<size_t> q2(2);
    q1[0] = n;
    v.apply_matrix(gates::h(), q1);
    for (size_t k = 1; k < n; k++) {
        q2 = {n + k - 1, n + k};
        v.apply_matrix(gates::cx(), q2);
    }
    for (size_t k = 0; k < n; k++) {
        q2 = {n + k, k};
        v.apply_matrix(gates::ch(), q2);
    }
    for (size_t k = 0; k < n; k++) {
        q1[0] = n + k;
        v.apply_matrix(gates::h(), q1);
    }
    Rng rng(seed);
    uint64_t index = sample_index(v, rng);
    uint64_t s = index >> n;
    AdaptiveRunRecord rec;
    rec.outcomes.resize(n);
    for (size_t k = 0; k < n; k++) {
        rec.outcomes[k] = (s >> k) & 1;
    }
    rec.parity = (std::popcount(s) & 1) ? -1 : 1;
    rec.accepted = rec.parity == 1;
    Eigen::VectorXcd data(Eigen::Index{1} << n);
    for (Eigen::Index d = 0; d < data.size(); d++) {
        data(d) = v[static_cast<uint64_t>(d) | (s << n)];
    }
    rec.post_state = StateVector::normalized(n, std::move(data));
    return rec;
}

double adaptive_success_probability(size_t n) {
    if (n == 0 || n > 12) {
        throw std::invalid_argument("adaptive_success_probability: n must be in [1, 12]");
    }
    Eigen::Index dim = Eigen::Index{1} << n;
    uint64_t ones = (uint64_t{1} << n) - 1;
    std::map<uint64_t, Eigen::VectorXcd> branches;
    for (uint64_t a : {uint64_t{0}, ones}) {
        Eigen::VectorXcd d = Eigen::VectorXcd::Zero(dim);
        d(0) = kSqrtHalf;
        branches[a] = d;
    }
    Eigen::MatrixXcd h = gates::h();
    for (size_t k = 0; k < n; k++) {
        for (auto &[a, d] : branches) {
            if ((a >> k) & 1) {
                apply_single(d, k, h);
            }
        }
    }
    double scale = std::exp2(-static_cast<double>(n) / 2);
    double even = 0;
    double total = 0;
    Eigen::VectorXcd out(dim);
    for (uint64_t s = 0; s <= ones; s++) {
        out.setZero();
        for (const auto &[a, d] : branches) {
            out += ((std::popcount(s & a) & 1) ? -scale : scale) * d;
        }
        double p = out.squaredNorm();
        total += p;
        if (!(std::popcount(s) & 1)) {
            even += p;
        }
    }
    return even / total;
}

MpsTensor MpsTensor::zxcat() {
    MpsTensor t;
    t.a0 << 1, 0, 0, kSqrtHalf;
    t.a1 << 0, 0, 0, kSqrtHalf;
    t.left << 1, 1;
    t.right << 1, 1;
    return t;
}

StateVector mps_contract(size_t n, Boundary boundary, const MpsTensor &t) {
    if (n == 0) {
        throw std::invalid_argument("mps_contract: n must be positive");
    }
    check_qubit_limit(n, "mps_contract");
    Eigen::VectorXcd v(Eigen::Index{1} << n);
    for (uint64_t x = 0; x < static_cast<uint64_t>(v.size()); x++) {
        Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
        for (size_t k = 0; k < n; k++) {
            m = m * t[(x >> k) & 1];
        }
        if (boundary == Boundary::Open) {
            v(static_cast<Eigen::Index>(x)) = t.left.transpose() * m * t.right;
        } else {
            v(static_cast<Eigen::Index>(x)) = m.trace();
        }
    }
    if (v.norm() == 0) {
        throw std::domain_error("mps_contract: contraction vanishes");
    }
    return StateVector::normalized(n, std::move(v));
}

double push_relation_residual(const MpsTensor &t) {
    Eigen::Matrix2cd x = pauli2('X');
    Eigen::Matrix2cd z = pauli2('Z');
    double worst = 0;
    for (int a = 0; a < 2; a++) {
        worst = std::max(worst, (z * t[a] * z - t[a]).cwiseAbs().maxCoeff());
        Eigen::Matrix2cd mixed = kSqrtHalf * (t.a0 + (a ? -1.0 : 1.0) * t.a1);
        worst = std::max(worst, (mixed - x * t[a] * x).cwiseAbs().maxCoeff());
    }
    return worst;
}

bool push_relation_check(double tol) { return push_relation_residual() <= tol; }

BellRunRecord bell_protocol_run(size_t n, uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("bell_protocol_run: n must be positive");
    }
    check_qubit_limit(3 * n, "bell_protocol_run");
    MpsTensor t = MpsTensor::zxcat();
    size_t total = 3 * n;
    Eigen::VectorXcd amps(Eigen::Index{1} << total);
    for (uint64_t i = 0; i < static_cast<uint64_t>(amps.size()); i++) {
        Complex a = 1;
        for (size_t k = 0; k < n && a != Complex(0); k++) {
            int x = (i >> k) & 1;
            int l = (i >> (n + 2 * k)) & 1;
            int r = (i >> (n + 2 * k + 1)) & 1;
            a *= t[x](l, r);
        }
        amps(static_cast<Eigen::Index>(i)) = a;
    }
    StateVector v = StateVector::normalized(total, std::move(amps));
    std::vector<size_t> q1(1);
    std::vector<size_t> q2(2);
    for (size_t k = 0; k < n; k++) {
        size_t right = n + 2 * k + 1;
        size_t left = n + 2 * ((k + 1) % n);
        q2 = {right, left};
        v.apply_matrix(gates::cx(), q2);
        q1[0] = right;
        v.apply_matrix(gates::h(), q1);
    }
    Rng rng(seed);
    uint64_t index = sample_index(v, rng);

    BellRunRecord rec;
    rec.outcomes.resize(n);
    rec.h_flags.assign(n, 0);
    bool carry_x = false;
    bool carry_z = false;
    for (size_t k = 0; k < n; k++) {
        uint8_t z = (index >> (n + 2 * k + 1)) & 1;
        uint8_t x = (index >> (n + 2 * ((k + 1) % n))) & 1;
        rec.outcomes[k] = {z, x};
        carry_x ^= x;
        carry_z ^= z;
        if (k + 1 < n && carry_x) {
            rec.h_flags[k + 1] = 1;
        }
    }
    rec.residual_x = carry_x;
    rec.residual_z = carry_z;
    bool flagged = false;
    for (auto f : rec.h_flags) {
        flagged |= f != 0;
    }
    rec.accepted = !flagged && !carry_x && !carry_z;

    uint64_t virt = index & ~((uint64_t{1} << n) - 1);
    Eigen::VectorXcd phys(Eigen::Index{1} << n);
    for (Eigen::Index p = 0; p < phys.size(); p++) {
        phys(p) = v[virt | static_cast<uint64_t>(p)];
    }
    rec.state = StateVector::normalized(n, std::move(phys));
    return rec;
}

}  // namespace magiclab

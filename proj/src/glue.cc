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

#include "magiclab/glue.h"

#include <cmath>

#include "magiclab/linalg.h"
#include "magiclab/random.h"

namespace magiclab {

namespace {

constexpr uint64_t kIntertwinerSeed = 0x676c7565;

Eigen::VectorXcd kron_vec(const Eigen::VectorXcd &high, const Eigen::VectorXcd &low) {
    Eigen::VectorXcd out(high.size() * low.size());
    for (Eigen::Index i = 0; i < high.size(); i++) {
        out.segment(i * low.size(), low.size()) = high(i) * low;
    }
    return out;
}

Eigen::VectorXcd random_factor(size_t n, bool product, Rng &rng) {
    if (!product) {
        return StateVector::random(n, rng).amplitudes();
    }
    Eigen::VectorXcd out = Eigen::VectorXcd::Ones(1);
    for (size_t q = 0; q < n; q++) {
        out = kron_vec(StateVector::random(1, rng).amplitudes(), out);
    }
    return out;
}

std::vector<size_t> range(size_t lo, size_t hi) {
    std::vector<size_t> out;
    for (size_t q = lo; q < hi; q++) {
        out.push_back(q);
    }
    return out;
}

std::vector<size_t> join(std::vector<size_t> a, const std::vector<size_t> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

double max_abs_diff(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

Partition Partition::from_sizes(size_t a, size_t b1, size_t b2, size_t c1, size_t c2, size_t d) {
    Partition p;
    p.sizes = {a, b1, b2, c1, c2, d};
    return p;
}

size_t Partition::total() const {
    size_t t = 0;
    for (size_t s : sizes) {
        t += s;
    }
    return t;
}

std::vector<size_t> Partition::qubits(std::initializer_list<int> blocks) const {
    std::vector<size_t> out;
    for (int b : blocks) {
        size_t start = 0;
        for (int i = 0; i < b; i++) {
            start += sizes[i];
        }
        for (size_t q = 0; q < sizes[b]; q++) {
            out.push_back(start + q);
        }
    }
    return out;
}

PlantedInstance planted_gluable_instance(const Partition &p, uint64_t seed, GlueOptions options) {
    for (size_t s : p.sizes) {
        if (s == 0) {
            throw std::invalid_argument("planted_gluable_instance: every block needs at least one qubit");
        }
    }
    const size_t n = p.total();
    check_qubit_limit(n, "planted_gluable_instance");
    const auto [a, b1, b2, c1, c2, d] = p.sizes;
    Rng rng(seed);

    Eigen::VectorXcd x = random_factor(a + b1, options.product, rng);
    Eigen::VectorXcd y = random_factor(b2 + c1, options.product, rng);
    Eigen::VectorXcd w = random_factor(c2 + d, options.product, rng);

    PlantedInstance out;
    out.w_a = random_unitary(size_t{1} << a, rng);
    Eigen::MatrixXcd w_d = random_unitary(size_t{1} << d, rng);
    StateVector xp(a + b1, x);
    xp.apply_matrix(out.w_a, range(0, a));
    StateVector wp(c2 + d, w);
    wp.apply_matrix(w_d, range(c2, c2 + d));
    Eigen::VectorXcd w_prime = wp.amplitudes();
    if (options.break_d_entropy) {
        w_prime = StateVector(c2 + d).amplitudes();
    }

    if (options.product) {
        out.v_b = Eigen::MatrixXcd::Identity(Eigen::Index{1} << (b1 + b2), Eigen::Index{1} << (b1 + b2));
        out.v_c = Eigen::MatrixXcd::Identity(Eigen::Index{1} << (c1 + c2), Eigen::Index{1} << (c1 + c2));
    } else {
        out.v_b = random_unitary(size_t{1} << (b1 + b2), rng);
        out.v_c = random_unitary(size_t{1} << (c1 + c2), rng);
    }

    StateVector psi(n, kron_vec(w, kron_vec(y, x)));
    StateVector psi_prime(n, kron_vec(w_prime, kron_vec(y, xp.amplitudes())));
    for (StateVector *s : {&psi, &psi_prime}) {
        s->apply_matrix(out.v_b, p.b());
        s->apply_matrix(out.v_c, p.c());
    }
    out.instance = GluableInstance{std::move(psi), std::move(psi_prime), p};
    return out;
}

GluableInstance generate_gluable_instance(const Partition &p, uint64_t seed, GlueOptions options) {
    return planted_gluable_instance(p, seed, options).instance;
}

PremiseReport check_premises(const GluableInstance &inst, double tol) {
    const Partition &p = inst.partition;
    if (inst.psi.num_qubits() != p.total() || inst.psi_prime.num_qubits() != p.total()) {
        throw std::invalid_argument("check_premises: states do not match the partition");
    }
    PremiseReport r;
    auto bc = join(p.b(), p.c());
    auto cd = join(p.c(), p.d());
    auto ab = join(p.a(), p.b());
    auto dq = p.d();
    r.bc_residual = max_abs_diff(reduced_density(inst.psi, bc).matrix(), reduced_density(inst.psi_prime, bc).matrix());
    r.mi_a_cd = mutual_information(inst.psi, p.a(), cd);
    r.mi_ab_d = mutual_information(inst.psi_prime, ab, dq);
    r.d_entropy_gap = std::abs(entanglement_entropy(inst.psi, dq) - entanglement_entropy(inst.psi_prime, dq));
    if (r.bc_residual > tol) {
        r.failed.push_back("bc_marginals");
    }
    if (r.mi_a_cd > tol) {
        r.failed.push_back("a_cd_independence");
    }
    if (r.mi_ab_d > tol) {
        r.failed.push_back("ab_d_independence");
    }
    if (r.d_entropy_gap > tol) {
        r.failed.push_back("d_entropy");
    }
    return r;
}

namespace {

void require_premises(const GluableInstance &inst, double tol, const char *what) {
    PremiseReport r = check_premises(inst, tol);
    if (!r.ok()) {
        std::string msg = std::string(what) + ": premises failed:";
        for (const auto &f : r.failed) {
            msg += " " + f;
        }
        throw PremiseError(msg, std::move(r));
    }
}

/// Polar factor of a fixed generic element of {K : (K x 1) rho' = rho (K x 1)}.
Eigen::MatrixXcd intertwining_unitary(const Eigen::MatrixXcd &rho, const Eigen::MatrixXcd &rho_prime, size_t da) {
    const Eigen::Index dab = rho.rows();
    const Eigen::Index na = static_cast<Eigen::Index>(da);
    const Eigen::Index nb = dab / na;
    Eigen::MatrixXcd lin(dab * dab, na * na);
    for (Eigen::Index q = 0; q < na; q++) {
        for (Eigen::Index pr = 0; pr < na; pr++) {
            // X = 1_B (x) |pr><q| on the A-low index.
            Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(dab, dab);
            for (Eigen::Index b = 0; b < nb; b++) {
                x(pr + na * b, q + na * b) = 1;
            }
            Eigen::MatrixXcd res = x * rho_prime - rho * x;
            lin.col(pr + na * q) = Eigen::Map<Eigen::VectorXcd>(res.data(), res.size());
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(lin, Eigen::ComputeThinV);
    const auto &sv = svd.singularValues();
    double scale = std::max(1.0, sv(0));
    std::vector<Eigen::Index> null_cols;
    for (Eigen::Index i = 0; i < sv.size(); i++) {
        if (sv(i) <= 1e-9 * scale) {
            null_cols.push_back(i);
        }
    }
    if (null_cols.empty()) {
        null_cols.push_back(sv.size() - 1);
    }
    Rng rng(kIntertwinerSeed);
    Eigen::VectorXcd k = Eigen::VectorXcd::Zero(na * na);
    for (Eigen::Index c : null_cols) {
        k += Complex(rng.normal(), rng.normal()) * svd.matrixV().col(c);
    }
    return polar_unitary(Eigen::Map<Eigen::MatrixXcd>(k.data(), na, na));
}

}  // namespace

GlueResult glue_states(const GluableInstance &inst, double tol) {
    require_premises(inst, tol, "glue_states");
    const Partition &p = inst.partition;
    auto a = p.a();
    auto ab = join(a, p.b());
    auto abc = join(ab, p.c());
    auto bcd = join(join(p.b(), p.c()), p.d());
    auto cd = join(p.c(), p.d());

    GlueResult r;
    r.u_a = intertwining_unitary(reduced_density(inst.psi, ab).matrix(), reduced_density(inst.psi_prime, ab).matrix(),
                                 size_t{1} << a.size());
    r.state = inst.psi_prime;
    r.state.apply_matrix(r.u_a, a);
    r.abc_residual = max_abs_diff(reduced_density(r.state, abc).matrix(), reduced_density(inst.psi, abc).matrix());
    r.bcd_residual =
        max_abs_diff(reduced_density(r.state, bcd).matrix(), reduced_density(inst.psi_prime, bcd).matrix());
    r.mi_a_cd = mutual_information(r.state, a, cd);
    r.mi_ab_d = mutual_information(r.state, ab, p.d());
    r.conclusions_hold = r.abc_residual <= tol && r.bcd_residual <= tol && r.mi_a_cd <= tol && r.mi_ab_d <= tol;
    return r;
}

double LowRankState::trace() const {
    double t = 0;
    for (const auto &g : factors) {
        t += g.squaredNorm();
    }
    return t;
}

double LowRankState::expectation(const Eigen::VectorXcd &v) const {
    double e = 0;
    for (const auto &g : factors) {
        e += std::norm(v.dot(g));
    }
    return e;
}

double LowRankState::distance_to_pure(const Eigen::VectorXcd &v) const {
    double frob = 0;
    for (const auto &gi : factors) {
        for (const auto &gj : factors) {
            frob += std::norm(gi.dot(gj));
        }
    }
    return std::sqrt(std::max(0.0, frob - 2 * expectation(v) + v.squaredNorm() * v.squaredNorm()));
}

DensityMatrix LowRankState::to_dense() const {
    if (num_qubits > kMaxDensityQubits) {
        throw std::length_error("LowRankState::to_dense: too many qubits");
    }
    Eigen::Index dim = Eigen::Index{1} << num_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &g : factors) {
        m.noalias() += g * g.adjoint();
    }
    return DensityMatrix(range(0, num_qubits), m);
}

PetzMap PetzMap::from_state(const StateVector &psi, const Partition &p, double cutoff) {
    auto ab = join(p.a(), p.b());
    Eigen::MatrixXcd rho_ab = reduced_density(psi, ab).matrix();
    Eigen::MatrixXcd inv_b = psd_inv_sqrt(reduced_density(psi, p.b()).matrix(), cutoff);
    const Eigen::Index na = Eigen::Index{1} << p.sizes[0];
    const Eigen::Index nb = inv_b.rows();
    Eigen::MatrixXcd embedded = Eigen::MatrixXcd::Zero(na * nb, na * nb);
    for (Eigen::Index b = 0; b < nb; b++) {
        for (Eigen::Index bp = 0; bp < nb; bp++) {
            for (Eigen::Index x = 0; x < na; x++) {
                embedded(x + na * b, x + na * bp) = inv_b(b, bp);
            }
        }
    }
    return PetzMap{p, psd_sqrt(rho_ab, cutoff) * embedded};
}

LowRankState PetzMap::apply_to_marginal(const StateVector &v) const {
    const size_t n = partition.total();
    if (v.num_qubits() != n) {
        throw std::invalid_argument("PetzMap: state does not match the partition");
    }
    const Eigen::Index na = Eigen::Index{1} << partition.sizes[0];
    const Eigen::Index nab = kernel.rows();
    const Eigen::Index ncd = static_cast<Eigen::Index>(v.dim()) / nab;
    const Eigen::Index nrest = static_cast<Eigen::Index>(v.dim()) / na;
    LowRankState out;
    out.num_qubits = n;
    // Tr_A |v><v| = sum_x |r_x><r_x| with r_x(bcd) = v(x + na * bcd).
    for (Eigen::Index x = 0; x < na; x++) {
        Eigen::VectorXcd row(nrest);
        for (Eigen::Index i = 0; i < nrest; i++) {
            row(i) = v[static_cast<uint64_t>(x + na * i)];
        }
        if (row.squaredNorm() < 1e-28) {
            continue;
        }
        for (Eigen::Index xp = 0; xp < na; xp++) {
            Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(nab, ncd);
            for (Eigen::Index i = 0; i < nrest; i++) {
                Eigen::Index full = xp + na * i;
                g(full % nab, full / nab) = row(i);
            }
            Eigen::MatrixXcd mapped = kernel * g;
            out.factors.emplace_back(Eigen::Map<Eigen::VectorXcd>(mapped.data(), mapped.size()));
        }
    }
    return out;
}

PetzResult petz_glue(const GluableInstance &inst, double tol) {
    GlueResult glued = glue_states(inst, tol);
    PetzMap map = PetzMap::from_state(inst.psi, inst.partition);
    PetzResult r;
    r.psi_distance = map.apply_to_marginal(inst.psi).distance_to_pure(inst.psi.amplitudes());
    r.output = map.apply_to_marginal(inst.psi_prime);
    r.glued_distance = r.output.distance_to_pure(glued.state.amplitudes());
    r.trace_error = std::abs(r.output.trace() - 1);
    return r;
}

}  // namespace magiclab

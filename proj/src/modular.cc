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

#include "magiclab/modular.h"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "magiclab/linalg.h"
#include "magiclab/random.h"

namespace magiclab {

using Rational = GoldenNumber::Rational;
using Complex = std::complex<double>;

namespace {

using Json = nlohmann::ordered_json;

Rational parse_rational(const Json &j) {
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    if (!j.is_string()) {
        throw std::invalid_argument("modular data: rationals must be integers or \"p/q\" strings");
    }
    std::string s = j.get<std::string>();
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(boost::multiprecision::cpp_int(s));
        }
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("modular data: zero denominator in " + s);
        }
        return Rational(num, den);
    } catch (const std::runtime_error &) {
        throw std::invalid_argument("modular data: cannot parse rational " + s);
    }
}

Json rational_json(const Rational &r) {
    if (denominator(r) == 1 && abs(numerator(r)) < std::numeric_limits<long long>::max()) {
        return Json(numerator(r).convert_to<long long>());
    }
    return Json(numerator(r).str() + "/" + denominator(r).str());
}

GoldenNumber parse_golden(const Json &j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("modular data: golden numbers are [a, b] pairs");
    }
    return GoldenNumber(parse_rational(j[0]), parse_rational(j[1]));
}

Json golden_json(const GoldenNumber &g) { return Json::array({rational_json(g.a()), rational_json(g.b())}); }

/// Row-reduces [a | rhs] over Q(phi). Returns the status and, if unique, x.
SolveStatus solve_golden(std::vector<std::vector<GoldenNumber>> rows, size_t unknowns,
                         std::vector<GoldenNumber> &x) {
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < unknowns && rank < rows.size(); col++) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        GoldenNumber inv = rows[rank][col].inverse();
        for (auto &v : rows[rank]) {
            v *= inv;
        }
        for (size_t r = 0; r < rows.size(); r++) {
            if (r == rank || rows[r][col].is_zero()) {
                continue;
            }
            GoldenNumber f = rows[r][col];
            for (size_t c = col; c <= unknowns; c++) {
                rows[r][c] -= f * rows[rank][c];
            }
        }
        pivot_col.push_back(col);
        rank++;
    }
    for (size_t r = rank; r < rows.size(); r++) {
        if (!rows[r][unknowns].is_zero()) {
            return SolveStatus::Inconsistent;
        }
    }
    if (rank < unknowns) {
        return SolveStatus::Underdetermined;
    }
    x.assign(unknowns, GoldenNumber(0));
    for (size_t r = 0; r < rank; r++) {
        x[pivot_col[r]] = rows[r][unknowns];
    }
    return SolveStatus::Unique;
}

/// Minimum-cost assignment; returns the column assigned to each row.
std::vector<size_t> hungarian(const Eigen::MatrixXd &cost) {
    const size_t n = static_cast<size_t>(cost.rows());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0);
    std::vector<double> v(n + 1, 0);
    std::vector<size_t> p(n + 1, 0);
    std::vector<size_t> way(n + 1, 0);
    for (size_t i = 1; i <= n; i++) {
        p[0] = i;
        size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            size_t i0 = p[j0];
            double delta = inf;
            size_t j1 = 0;
            for (size_t j = 1; j <= n; j++) {
                if (used[j]) {
                    continue;
                }
                double cur = cost(static_cast<Eigen::Index>(i0 - 1), static_cast<Eigen::Index>(j - 1)) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (size_t j = 0; j <= n; j++) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<size_t> row_to_col(n);
    for (size_t j = 1; j <= n; j++) {
        row_to_col[p[j] - 1] = j - 1;
    }
    return row_to_col;
}

std::vector<size_t> inverse_perm(const std::vector<size_t> &pi) {
    std::vector<size_t> inv(pi.size());
    for (size_t i = 0; i < pi.size(); i++) {
        inv[pi[i]] = i;
    }
    return inv;
}

}  // namespace

Eigen::MatrixXcd ModularData::s_matrix() const {
    size_t k = rank();
    Eigen::MatrixXcd m(k, k);
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            m(i, j) = s(i, j).to_double();
        }
    }
    return m;
}

Eigen::MatrixXcd ModularData::t_matrix() const {
    size_t k = rank();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(k, k);
    for (size_t j = 0; j < k; j++) {
        m(j, j) = std::polar(1.0, 2 * M_PI * t_exponents[j] / t_root);
    }
    return m;
}

void ModularData::validate() const {
    size_t k = rank();
    if (k == 0 || s_raw.size() != k || t_exponents.size() != k || t_root <= 0) {
        throw std::invalid_argument("modular data: inconsistent sizes");
    }
    for (const auto &row : s_raw) {
        if (row.size() != k) {
            throw std::invalid_argument("modular data: S must be square");
        }
    }
    for (size_t i = 0; i < k; i++) {
        if (dims[i].sign() <= 0) {
            throw std::invalid_argument("modular data: dims must be positive");
        }
        for (size_t j = 0; j < i; j++) {
            if (!(s_raw[i][j] == s_raw[j][i])) {
                throw std::invalid_argument("modular data: S must be symmetric");
            }
        }
    }
    Eigen::MatrixXcd s = s_matrix();
    if ((s * s.adjoint() - Eigen::MatrixXcd::Identity(k, k)).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("modular data: S is not unitary");
    }
}

ModularData double_fibonacci() {
    const GoldenNumber one(1);
    const GoldenNumber phi = GoldenNumber::phi();
    const GoldenNumber phi2 = phi * phi;
    ModularData d;
    d.name = "double-fibonacci";
    d.dims = {one, phi, phi, phi2};
    d.s_prefactor = (GoldenNumber(2) + phi).inverse();
    d.s_raw = {
        {one, phi, phi, phi2},
        {phi, -one, phi2, -phi},
        {phi, phi2, -one, -phi},
        {phi2, -phi, -phi, one},
    };
    d.t_root = 10;
    d.t_exponents = {0, 4, 6, 0};
    return d;
}

ModularData modular_from_json(const std::string &text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw std::invalid_argument(std::string("modular data: ") + e.what());
    }
    try {
        ModularData d;
        d.name = j.value("name", std::string("unnamed"));
        for (const auto &g : j.at("dims")) {
            d.dims.push_back(parse_golden(g));
        }
        d.s_prefactor = j.contains("s_prefactor") ? parse_golden(j["s_prefactor"]) : GoldenNumber(1);
        for (const auto &row : j.at("s")) {
            std::vector<GoldenNumber> r;
            for (const auto &g : row) {
                r.push_back(parse_golden(g));
            }
            d.s_raw.push_back(std::move(r));
        }
        d.t_root = j.at("t_root").get<int>();
        d.t_exponents = j.at("t_exponents").get<std::vector<int>>();
        d.validate();
        return d;
    } catch (const Json::exception &e) {
        throw std::invalid_argument(std::string("modular data: ") + e.what());
    }
}

std::string modular_to_json(const ModularData &data) {
    Json j;
    j["name"] = data.name;
    j["dims"] = Json::array();
    for (const auto &g : data.dims) {
        j["dims"].push_back(golden_json(g));
    }
    j["s_prefactor"] = golden_json(data.s_prefactor);
    j["s"] = Json::array();
    for (const auto &row : data.s_raw) {
        Json r = Json::array();
        for (const auto &g : row) {
            r.push_back(golden_json(g));
        }
        j["s"].push_back(r);
    }
    j["t_root"] = data.t_root;
    j["t_exponents"] = data.t_exponents;
    return j.dump(2);
}

GoldenNumber verlinde_dim(const std::vector<GoldenNumber> &dims, int genus) {
    if (genus < 1) {
        throw std::invalid_argument("verlinde_dim: genus must be at least 1");
    }
    if (dims.empty()) {
        throw std::invalid_argument("verlinde_dim: no labels");
    }
    GoldenNumber total(0);
    for (const auto &d : dims) {
        if (d.sign() <= 0) {
            throw std::invalid_argument("verlinde_dim: dims must be positive");
        }
        total += d * d;
    }
    GoldenNumber sum(0);
    for (const auto &d : dims) {
        sum += (total / (d * d)).pow(genus - 1);
    }
    return sum;
}

std::vector<std::vector<size_t>> dim_preserving_perms(const std::vector<GoldenNumber> &dims) {
    if (dims.size() > 10) {
        throw std::invalid_argument("dim_preserving_perms: at most 10 labels");
    }
    std::vector<size_t> pi(dims.size());
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<std::vector<size_t>> out;
    do {
        bool ok = true;
        for (size_t i = 0; i < pi.size() && ok; i++) {
            ok = dims[pi[i]] == dims[i];
        }
        if (ok) {
            out.push_back(pi);
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

Eigen::MatrixXcd permutation_matrix(const std::vector<size_t> &pi) {
    Eigen::Index k = static_cast<Eigen::Index>(pi.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(k, k);
    for (size_t i = 0; i < pi.size(); i++) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(pi[i])) = 1;
    }
    return m;
}

MonomialFit monomial_distance(const Eigen::MatrixXcd &m, double tol) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("monomial_distance: matrix must be square");
    }
    MonomialFit fit;
    if (m.rows() == 0) {
        fit.monomial = true;
        return fit;
    }
    Eigen::MatrixXd weight = m.cwiseAbs2();
    fit.pattern = hungarian(-weight);
    double off = 0;
    for (size_t i = 0; i < fit.pattern.size(); i++) {
        Eigen::Index r = static_cast<Eigen::Index>(i);
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            if (c != static_cast<Eigen::Index>(fit.pattern[i])) {
                off += weight(r, c);
            }
        }
        fit.entries.push_back(m(r, static_cast<Eigen::Index>(fit.pattern[i])));
    }
    fit.distance = std::sqrt(off);
    fit.monomial = fit.distance <= tol;
    return fit;
}

Eigen::MatrixXcd MonomialCandidate::matrix() const {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(z.size()), static_cast<Eigen::Index>(z.size()));
    for (size_t j = 0; j < z.size(); j++) {
        d(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = z[j];
    }
    return permutation_matrix(perm) * d;
}

LpuResult lpu_search(const ModularData &data, double tol) {
    data.validate();
    const size_t k = data.rank();
    std::vector<std::vector<GoldenNumber>> s(k, std::vector<GoldenNumber>(k));
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            s[i][j] = data.s(i, j);
        }
    }
    Eigen::MatrixXcd st = data.s_matrix() * data.t_matrix();

    std::vector<size_t> pattern(k);
    std::iota(pattern.begin(), pattern.end(), 0);
    std::vector<std::vector<size_t>> patterns;
    do {
        patterns.push_back(pattern);
    } while (std::next_permutation(pattern.begin(), pattern.end()));

    LpuResult result;
    for (const auto &perm : dim_preserving_perms(data.dims)) {
        auto inv = inverse_perm(perm);
        for (const auto &pat : patterns) {
            // Entry (r, c) of S Pi D S^dag is sum_j z_j S[r][inv[j]] S[c][j] (S real).
            std::vector<std::vector<GoldenNumber>> rows;
            for (size_t r = 0; r < k; r++) {
                for (size_t c = 0; c < k; c++) {
                    if (c == pat[r]) {
                        continue;
                    }
                    std::vector<GoldenNumber> row(k);
                    for (size_t j = 1; j < k; j++) {
                        row[j - 1] = s[r][inv[j]] * s[c][j];
                    }
                    row[k - 1] = -(s[r][inv[0]] * s[c][0]);
                    rows.push_back(std::move(row));
                }
            }
            LpuCase cs;
            cs.perm = perm;
            cs.pattern = pat;
            std::vector<GoldenNumber> x;
            cs.status = solve_golden(rows, k - 1, x);
            if (cs.status == SolveStatus::Underdetermined) {
                throw std::domain_error("lpu_search: off-pattern system is underdetermined");
            }
            if (cs.status == SolveStatus::Unique) {
                cs.z.push_back(GoldenNumber(1));
                cs.z.insert(cs.z.end(), x.begin(), x.end());
                cs.unimodular = std::all_of(cs.z.begin(), cs.z.end(),
                                            [](const GoldenNumber &v) { return v * v == GoldenNumber(1); });
                if (cs.unimodular) {
                    MonomialCandidate cand{perm, {}};
                    for (const auto &v : cs.z) {
                        cand.z.emplace_back(v.to_double(), 0.0);
                    }
                    Eigen::MatrixXcd conj = st * cand.matrix() * st.adjoint();
                    cs.st_distance = monomial_distance(conj, tol).distance;
                    cs.survives = *cs.st_distance <= tol;
                    if (cs.survives) {
                        result.survivors.push_back(cand);
                    }
                }
            }
            result.cases.push_back(std::move(cs));
        }
    }
    return result;
}

Eigen::MatrixXcd conjugate_by_s(const ModularData &data, const std::vector<size_t> &perm,
                                const std::vector<Complex> &z) {
    if (perm.size() != data.rank() || z.size() != data.rank()) {
        throw std::invalid_argument("conjugate_by_s: size mismatch");
    }
    Eigen::MatrixXcd s = data.s_matrix();
    return s * MonomialCandidate{perm, z}.matrix() * s.adjoint();
}

double offdiag_modulus_scan(const ModularData &data, const std::vector<size_t> &perm, size_t samples,
                            uint64_t seed) {
    Rng rng(seed);
    const size_t k = data.rank();
    double worst = 0;
    std::vector<Complex> z(k, 1.0);
    for (size_t t = 0; t < samples; t++) {
        for (size_t j = 1; j < k; j++) {
            z[j] = std::polar(1.0, 2 * M_PI * rng.uniform());
        }
        Eigen::MatrixXcd c = conjugate_by_s(data, perm, z);
        for (Eigen::Index r = 0; r < c.rows(); r++) {
            for (Eigen::Index col = 0; col < c.cols(); col++) {
                if (r != col) {
                    worst = std::max(worst, std::abs(c(r, col)));
                }
            }
        }
    }
    return worst;
}

std::optional<Eigen::MatrixXcd> scalar_rigidity_trial(size_t n, const Eigen::MatrixXcd &k, size_t attempts,
                                                      uint64_t seed, double tol) {
    Eigen::Index dim = static_cast<Eigen::Index>(n * n);
    if (k.rows() != dim || k.cols() != dim) {
        throw std::invalid_argument("scalar_rigidity_trial: K must be n^2 by n^2");
    }
    Rng rng(seed);
    for (size_t a = 0; a < attempts; a++) {
        Eigen::MatrixXcd u = random_unitary(n, rng);
        Eigen::MatrixXcd uc = u.conjugate();
        Eigen::MatrixXcd w(dim, dim);
        Eigen::Index nn = static_cast<Eigen::Index>(n);
        for (Eigen::Index i = 0; i < nn; i++) {
            for (Eigen::Index j = 0; j < nn; j++) {
                w.block(i * nn, j * nn, nn, nn) = u(i, j) * uc;
            }
        }
        Eigen::MatrixXcd ku = w * k * w.adjoint();
        if (!monomial_distance(ku, tol).monomial) {
            return u;
        }
    }
    return std::nullopt;
}

}  // namespace magiclab

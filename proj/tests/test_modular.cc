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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "magiclab/linalg.h"
#include "magiclab/modular.h"
#include "magiclab/random.h"

using namespace magiclab;
using Complex = std::complex<double>;
using Rational = GoldenNumber::Rational;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;

/// The double Fibonacci S and T written out in floating point.
Eigen::MatrixXcd s_oracle() {
    double p = kPhi;
    double q = p * p;
    Eigen::MatrixXcd s(4, 4);
    s << 1, p, p, q, p, -1, q, -p, p, q, -1, -p, q, -p, -p, 1;
    return s / (2 + p);
}

Eigen::MatrixXcd t_oracle() {
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(4, 4);
    t(0, 0) = 1;
    t(1, 1) = std::exp(Complex(0, 4 * M_PI / 5));
    t(2, 2) = std::exp(Complex(0, -4 * M_PI / 5));
    t(3, 3) = 1;
    return t;
}

/// Min over all permutations of the off-pattern Frobenius norm.
double brute_monomial_distance(const Eigen::MatrixXcd &m) {
    std::vector<size_t> p(static_cast<size_t>(m.rows()));
    std::iota(p.begin(), p.end(), 0);
    double total = m.cwiseAbs2().sum();
    double best = total;
    do {
        double kept = 0;
        for (size_t i = 0; i < p.size(); i++) {
            kept += std::norm(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p[i])));
        }
        best = std::min(best, total - kept);
    } while (std::next_permutation(p.begin(), p.end()));
    return std::sqrt(std::max(best, 0.0));
}

GoldenNumber random_golden(Rng &rng) {
    auto r = [&]() { return Rational(static_cast<long>(rng.below(41)) - 20, static_cast<long>(rng.below(9)) + 1); };
    return GoldenNumber(r(), r());
}

}  // namespace

TEST(Golden, identities) {
    GoldenNumber phi = GoldenNumber::phi();
    EXPECT_EQ(phi * phi, phi + 1);
    EXPECT_EQ(phi.pow(4), 3 * phi + 2);
    EXPECT_EQ((2 + phi).inverse(), GoldenNumber(Rational(3, 5), Rational(-1, 5)));
    EXPECT_EQ((2 + phi) * (2 + phi), 5 * phi * phi);
    EXPECT_EQ(phi.pow(-2) + phi.pow(2), GoldenNumber(3));
    EXPECT_NEAR(phi.to_double(), kPhi, 1e-15);
    EXPECT_THROW(GoldenNumber(0).inverse(), std::domain_error);
}

TEST(Golden, field_axioms_and_sign) {
    Rng rng(11);
    for (int t = 0; t < 300; t++) {
        GoldenNumber a = random_golden(rng);
        GoldenNumber b = random_golden(rng);
        GoldenNumber c = random_golden(rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), GoldenNumber(1));
        }
        double v = a.to_double();
        EXPECT_NEAR(v, a.a().convert_to<double>() + a.b().convert_to<double>() * kPhi, 1e-12);
        if (std::abs(v) > 1e-9) {
            EXPECT_EQ(a.sign(), v > 0 ? 1 : -1);
        }
    }
    // 1 - phi + phi^{-1} vanishes; 3 - sqrt5 style near-cancellations are decided exactly.
    EXPECT_EQ((1 - GoldenNumber::phi() + GoldenNumber::phi().inverse()).sign(), 0);
    EXPECT_EQ(GoldenNumber(Rational(-1619, 1000), 1).sign(), -1);
    EXPECT_EQ(GoldenNumber(Rational(-1618, 1000), 1).sign(), 1);
    EXPECT_EQ(GoldenNumber(Rational(1618, 1000), -1).sign(), -1);
}

TEST(DoubleFibonacci, displayed_data) {
    auto d = double_fibonacci();
    EXPECT_NO_THROW(d.validate());
    EXPECT_EQ(d.s(0, 0), (2 + GoldenNumber::phi()).inverse());
    EXPECT_LT((d.s_matrix() - s_oracle()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((d.t_matrix() - t_oracle()).cwiseAbs().maxCoeff(), 1e-15);
    std::vector<GoldenNumber> dims = {1, GoldenNumber::phi(), GoldenNumber::phi(), 1 + GoldenNumber::phi()};
    EXPECT_EQ(d.dims, dims);
}

TEST(DoubleFibonacci, modular_relations) {
    auto d = double_fibonacci();
    // S^2 = 1 exactly in Q(phi).
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            GoldenNumber acc(0);
            for (size_t l = 0; l < 4; l++) {
                acc += d.s(i, l) * d.s(l, j);
            }
            EXPECT_EQ(acc, GoldenNumber(i == j ? 1 : 0));
        }
    }
    Eigen::MatrixXcd s = s_oracle();
    Eigen::MatrixXcd st = s * t_oracle();
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
    EXPECT_LT((s * s - id).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((st * st * st - s * s).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT((s * s.adjoint() - id).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Verlinde, dimensions) {
    auto d = double_fibonacci();
    EXPECT_EQ(verlinde_dim(d.dims, 1), GoldenNumber(4));
    EXPECT_EQ(verlinde_dim(d.dims, 2), GoldenNumber(25));
    std::vector<GoldenNumber> fib = {1, GoldenNumber::phi()};
    for (int g = 2; g <= 5; g++) {
        EXPECT_GT(verlinde_dim(fib, g).to_double(), 2.0);
        EXPECT_GT(verlinde_dim(d.dims, g).to_double(), 4.0);
    }
    // Genus 3 by hand: D^4 (1 + 2 phi^{-4} + phi^{-8}) with D^2 = 5 phi^2.
    GoldenNumber phi = GoldenNumber::phi();
    GoldenNumber d4 = 25 * phi.pow(4);
    EXPECT_EQ(verlinde_dim(d.dims, 3), d4 * (1 + 2 * phi.pow(-4) + phi.pow(-8)));
    std::vector<GoldenNumber> abelian(3, GoldenNumber(1));
    EXPECT_EQ(verlinde_dim(abelian, 4), GoldenNumber(3 * 27));
    EXPECT_THROW(verlinde_dim(d.dims, 0), std::invalid_argument);
    EXPECT_THROW(verlinde_dim({GoldenNumber(-1)}, 2), std::invalid_argument);
}

TEST(Permutations, dimension_preserving) {
    auto perms = dim_preserving_perms(double_fibonacci().dims);
    ASSERT_EQ(perms.size(), 2u);
    EXPECT_EQ(perms[0], (std::vector<size_t>{0, 1, 2, 3}));
    EXPECT_EQ(perms[1], (std::vector<size_t>{0, 2, 1, 3}));
    EXPECT_EQ(dim_preserving_perms({1, 2, 3}).size(), 1u);
    EXPECT_EQ(dim_preserving_perms({2, 2, 2}).size(), 6u);
}

TEST(Monomial, distance) {
    Eigen::MatrixXcd p = permutation_matrix({2, 0, 3, 1});
    EXPECT_EQ(monomial_distance(p).distance, 0.0);
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
    d(0, 0) = 1;
    d(1, 1) = std::polar(1.0, 0.7);
    auto fit = monomial_distance(d);
    EXPECT_EQ(fit.distance, 0.0);
    EXPECT_TRUE(fit.monomial);
    EXPECT_EQ(fit.entries[1], d(1, 1));
    EXPECT_GT(monomial_distance(s_oracle()).distance, 0.5);
    EXPECT_THROW(monomial_distance(Eigen::MatrixXcd::Zero(2, 3)), std::invalid_argument);

    Rng rng(3);
    for (int t = 0; t < 40; t++) {
        size_t k = 2 + rng.below(5);
        Eigen::MatrixXcd m(k, k);
        for (Eigen::Index i = 0; i < m.size(); i++) {
            m.data()[i] = Complex(rng.normal(), rng.normal());
        }
        EXPECT_NEAR(monomial_distance(m).distance, brute_monomial_distance(m), 1e-12);
        // Pi D for random phases is monomial exactly.
        std::vector<size_t> pi(k);
        std::iota(pi.begin(), pi.end(), 0);
        std::shuffle(pi.begin(), pi.end(), rng.engine());
        MonomialCandidate c{pi, {}};
        for (size_t j = 0; j < k; j++) {
            c.z.push_back(std::polar(1.0, 2 * M_PI * rng.uniform()));
        }
        auto f = monomial_distance(c.matrix());
        EXPECT_EQ(f.distance, 0.0);
        for (size_t i = 0; i < k; i++) {
            EXPECT_EQ(f.pattern[i], pi[i]);
        }
    }
}

TEST(LpuSearch, only_identity_survives) {
    auto d = double_fibonacci();
    auto result = lpu_search(d);
    ASSERT_EQ(result.survivors.size(), 1u);
    EXPECT_EQ(result.survivors[0].perm, (std::vector<size_t>{0, 1, 2, 3}));
    for (auto z : result.survivors[0].z) {
        EXPECT_EQ(z, Complex(1, 0));
    }
    EXPECT_EQ(result.cases.size(), 2u * 24u);
    std::vector<GoldenNumber> ones(4, GoldenNumber(1));
    for (const auto &cs : result.cases) {
        // S commutes with the label swap, so S Pi D S^dag keeps the pattern of Pi.
        if (cs.pattern == cs.perm) {
            ASSERT_EQ(cs.status, SolveStatus::Unique);
            EXPECT_EQ(cs.z, ones);
            ASSERT_TRUE(cs.st_distance.has_value());
            if (cs.perm == std::vector<size_t>{0, 1, 2, 3}) {
                EXPECT_TRUE(cs.survives);
                EXPECT_LT(*cs.st_distance, 1e-12);
            } else {
                EXPECT_FALSE(cs.survives);
                EXPECT_GT(*cs.st_distance, 0.1);
            }
        } else {
            EXPECT_FALSE(cs.survives);
        }
    }
}

TEST(LpuSearch, swapped_case_numerically) {
    auto d = double_fibonacci();
    std::vector<size_t> swap = {0, 2, 1, 3};
    Eigen::MatrixXcd pi = permutation_matrix(swap);
    Eigen::MatrixXcd s = s_oracle();
    // S commutes with the label swap, so S Pi S^dag = Pi.
    EXPECT_LT((s * pi * s.adjoint() - pi).cwiseAbs().maxCoeff(), 1e-12);
    Eigen::MatrixXcd st = s * t_oracle();
    EXPECT_GT(brute_monomial_distance(st * pi * st.adjoint()), 0.1);
    (void)d;
}

TEST(OffDiagonal, scan_and_expansion) {
    auto d = double_fibonacci();
    std::vector<size_t> id = {0, 1, 2, 3};
    Eigen::MatrixXcd c = conjugate_by_s(d, id, {1, 1, 1, 1});
    EXPECT_LT((c - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-12);
    double worst = offdiag_modulus_scan(d, id, 10000, 5);
    EXPECT_LT(worst, 1.0);
    EXPECT_LT(offdiag_modulus_scan(d, {0, 2, 1, 3}, 10000, 6), 1.0);

    // First row of the hand expansion with z = (-1, 1, 1).
    double p = kPhi;
    double z1 = -1, z2 = 1, z3 = 1;
    double pre = 1 / (5 * p * p);
    std::vector<double> row = {
        1 + p * p * z1 + p * p * z2 + std::pow(p, 4) * z3,
        p - p * z1 + std::pow(p, 3) * z2 - std::pow(p, 3) * z3,
        p + std::pow(p, 3) * z1 - p * z2 - std::pow(p, 3) * z3,
        p * p - p * p * z1 - p * p * z2 + p * p * z3,
    };
    Eigen::MatrixXcd e = conjugate_by_s(d, id, {1, z1, z2, z3});
    for (Eigen::Index j = 0; j < 4; j++) {
        EXPECT_NEAR(std::abs(e(0, j) - pre * row[static_cast<size_t>(j)]), 0.0, 1e-12) << j;
    }
}

TEST(Rigidity, scalar_and_nonscalar) {
    Eigen::MatrixXcd scalar = 2.0 * Eigen::MatrixXcd::Identity(9, 9);
    EXPECT_FALSE(scalar_rigidity_trial(3, scalar, 2000, 1).has_value());

    Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(9, 9);
    for (Eigen::Index i = 0; i < 3; i++) {
        for (Eigen::Index j = 0; j < 3; j++) {
            swap(i * 3 + j, j * 3 + i) = 1;
        }
    }
    auto w = scalar_rigidity_trial(3, swap, 1000, 2);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_unitary(*w, 1e-10));

    // A (x) B with A a non-scalar monomial.
    Eigen::MatrixXcd a = permutation_matrix({1, 2, 0});
    Eigen::MatrixXcd k(9, 9);
    for (Eigen::Index i = 0; i < 3; i++) {
        for (Eigen::Index j = 0; j < 3; j++) {
            k.block(i * 3, j * 3, 3, 3) = a(i, j) * Eigen::MatrixXcd::Identity(3, 3);
        }
    }
    EXPECT_TRUE(scalar_rigidity_trial(3, k, 1000, 3).has_value());
    EXPECT_THROW(scalar_rigidity_trial(3, Eigen::MatrixXcd::Identity(4, 4), 1, 0), std::invalid_argument);
}

TEST(ModularJson, round_trip_and_errors) {
    auto d = double_fibonacci();
    std::string text = modular_to_json(d);
    auto back = modular_from_json(text);
    EXPECT_EQ(back.dims, d.dims);
    EXPECT_EQ(back.s_prefactor, d.s_prefactor);
    EXPECT_EQ(back.s_raw, d.s_raw);
    EXPECT_EQ(back.t_exponents, d.t_exponents);
    EXPECT_EQ(back.t_root, 10);
    EXPECT_NE(text.find("\"3/5\""), std::string::npos);
    EXPECT_THROW(modular_from_json("{"), std::invalid_argument);
    EXPECT_THROW(modular_from_json(R"({"dims": [[1, 0]], "s": [[[2, 0]]], "t_root": 1, "t_exponents": [0]})"),
                 std::invalid_argument);
    auto trivial = modular_from_json(R"({"dims": [[1, 0]], "s": [[[1, 0]]], "t_root": 1, "t_exponents": [0]})");
    EXPECT_EQ(lpu_search(trivial).survivors.size(), 1u);
}

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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magiclab/golden.h"

namespace magiclab {

/// Modular S and T data with golden-ratio entries. S = s_prefactor * s_raw;
/// T_jj = exp(2 pi i t_exponents[j] / t_root).
struct ModularData {
    std::string name;
    std::vector<GoldenNumber> dims;
    GoldenNumber s_prefactor;
    std::vector<std::vector<GoldenNumber>> s_raw;
    int t_root = 1;
    std::vector<int> t_exponents;

    size_t rank() const { return dims.size(); }
    GoldenNumber s(size_t i, size_t j) const { return s_prefactor * s_raw[i][j]; }
    Eigen::MatrixXcd s_matrix() const;
    Eigen::MatrixXcd t_matrix() const;
    /// Throws std::invalid_argument on inconsistent sizes, a non-symmetric S,
    /// or a numerically non-unitary S.
    void validate() const;
};

/// Fibonacci times its conjugate: labels 1, a, abar, a abar.
ModularData double_fibonacci();

/// {"name", "dims": [[a, b], ...], "s_prefactor": [a, b],
///  "s": [[[a, b], ...], ...], "t_root": N, "t_exponents": [...]}
/// where each rational is an integer or a string "p/q".
ModularData modular_from_json(const std::string &text);
std::string modular_to_json(const ModularData &data);

/// sum_i (D / d_i)^{2g - 2} with D^2 = sum_i d_i^2, exact. Requires g >= 1
/// and positive dims.
GoldenNumber verlinde_dim(const std::vector<GoldenNumber> &dims, int genus);

/// Every permutation pi with d_{pi(i)} = d_i; pi[i] is the image of i.
/// Requires at most 10 labels.
std::vector<std::vector<size_t>> dim_preserving_perms(const std::vector<GoldenNumber> &dims);

/// Permutation matrix with Pi(i, pi[i]) = 1.
Eigen::MatrixXcd permutation_matrix(const std::vector<size_t> &pi);

struct MonomialFit {
    /// Frobenius norm of the entries off the best one-per-row-and-column
    /// pattern.
    double distance = 0;
    /// pattern[i] is the column kept in row i.
    std::vector<size_t> pattern;
    /// M(i, pattern[i]).
    std::vector<std::complex<double>> entries;
    bool monomial = false;
};
/// The pattern maximizes the kept squared weight (Hungarian assignment).
/// Throws std::invalid_argument for a non-square matrix.
MonomialFit monomial_distance(const Eigen::MatrixXcd &m, double tol = 1e-9);

struct MonomialCandidate {
    std::vector<size_t> perm;
    /// Unimodular phases with z[0] = 1, so L = Pi_perm diag(z).
    std::vector<std::complex<double>> z;

    Eigen::MatrixXcd matrix() const;
};

enum class SolveStatus { Inconsistent, Unique, Underdetermined };

/// One exact solve: entries of S (Pi D) S^dag outside `pattern` set to zero.
struct LpuCase {
    std::vector<size_t> perm;
    std::vector<size_t> pattern;
    SolveStatus status = SolveStatus::Inconsistent;
    /// (1, z_1, ..., z_{k-1}) when status is Unique.
    std::vector<GoldenNumber> z;
    bool unimodular = false;
    /// Monomial distance of (ST) L (ST)^dag for unimodular solutions.
    std::optional<double> st_distance;
    bool survives = false;
};

struct LpuResult {
    std::vector<LpuCase> cases;
    std::vector<MonomialCandidate> survivors;
};

/// For every dimension-preserving permutation and every candidate support
/// pattern of S L S^dag, solves the linear system in z over Q(phi), keeps
/// unimodular solutions and then those with (ST) L (ST)^dag monomial. Throws
/// std::domain_error if some system is underdetermined.
LpuResult lpu_search(const ModularData &data, double tol = 1e-9);

/// S (Pi D) S^dag for numeric phases z (z[0] should be 1).
Eigen::MatrixXcd conjugate_by_s(const ModularData &data, const std::vector<size_t> &perm,
                                const std::vector<std::complex<double>> &z);

/// Max off-diagonal modulus of S (Pi D) S^dag over random phases z.
double offdiag_modulus_scan(const ModularData &data, const std::vector<size_t> &perm, size_t samples,
                            uint64_t seed);

/// Samples Haar unitaries U on C^n and returns the first U for which
/// (U (x) conj U) K (U (x) conj U)^dag is not monomial within tol, if any.
/// K must be n^2 by n^2.
std::optional<Eigen::MatrixXcd> scalar_rigidity_trial(size_t n, const Eigen::MatrixXcd &k, size_t attempts,
                                                      uint64_t seed, double tol = 1e-9);

}  // namespace magiclab

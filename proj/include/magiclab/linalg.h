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
#include <complex>

#include "magiclab/random.h"

namespace magiclab {

using Complex = std::complex<double>;

/// Haar-random unitary (QR of a complex Ginibre matrix with the R-diagonal
/// phases divided out).
Eigen::MatrixXcd random_unitary(size_t dim, Rng &rng);
/// Gaussian Hermitian matrix scaled to unit spectral norm.
Eigen::MatrixXcd random_hermitian_unit(size_t dim, Rng &rng);

bool is_unitary(const Eigen::MatrixXcd &u, double tol = 1e-12);
bool is_hermitian(const Eigen::MatrixXcd &m, double tol = 1e-12);

/// Square root of a positive semidefinite matrix; eigenvalues below `cutoff`
/// are dropped.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd &m, double cutoff = 0.0);
/// Pseudo-inverse square root with the same cutoff rule.
Eigen::MatrixXcd psd_inv_sqrt(const Eigen::MatrixXcd &m, double cutoff);

/// Shannon entropy in bits of eigenvalues, clipping those below 1e-12.
double entropy_bits(const Eigen::VectorXd &eigenvalues);

/// Closest unitary in Frobenius norm (the polar factor of m).
Eigen::MatrixXcd polar_unitary(const Eigen::MatrixXcd &m);

}  // namespace magiclab

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

#include "magiclab/linalg.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace magiclab {

Eigen::MatrixXcd random_unitary(size_t dim, Rng &rng) {
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index i = 0; i < g.rows(); i++) {
        for (Eigen::Index j = 0; j < g.cols(); j++) {
            g(i, j) = Complex(rng.normal(), rng.normal()) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < q.cols(); k++) {
        Complex d = r(k, k);
        double mag = std::abs(d);
        q.col(k) *= mag > 0 ? d / mag : Complex(1.0);
    }
    return q;
}

Eigen::MatrixXcd random_hermitian_unit(size_t dim, Rng &rng) {
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index i = 0; i < g.rows(); i++) {
        for (Eigen::Index j = 0; j < g.cols(); j++) {
            g(i, j) = Complex(rng.normal(), rng.normal());
        }
    }
    Eigen::MatrixXcd h = (g + g.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    double norm = es.eigenvalues().cwiseAbs().maxCoeff();
    return h / norm;
}

bool is_unitary(const Eigen::MatrixXcd &u, double tol) {
    if (u.rows() != u.cols()) {
        return false;
    }
    Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const Eigen::MatrixXcd &m, double tol) {
    return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

namespace {

Eigen::MatrixXcd spectral_apply(const Eigen::MatrixXcd &m, double cutoff, double power) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    Eigen::VectorXd vals = es.eigenvalues();
    Eigen::VectorXd f(vals.size());
    for (Eigen::Index k = 0; k < vals.size(); k++) {
        f(k) = vals(k) > cutoff && vals(k) > 0 ? std::pow(vals(k), power) : 0.0;
    }
    return es.eigenvectors() * f.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd &m, double cutoff) { return spectral_apply(m, cutoff, 0.5); }

Eigen::MatrixXcd psd_inv_sqrt(const Eigen::MatrixXcd &m, double cutoff) { return spectral_apply(m, cutoff, -0.5); }

double entropy_bits(const Eigen::VectorXd &eigenvalues) {
    double s = 0;
    for (Eigen::Index k = 0; k < eigenvalues.size(); k++) {
        double p = eigenvalues(k);
        if (p > 1e-12) {
            s -= p * std::log2(p);
        }
    }
    return std::max(s, 0.0);
}

Eigen::MatrixXcd polar_unitary(const Eigen::MatrixXcd &m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace magiclab

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

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "magiclab/report.h"

namespace magiclab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Nearest double to an exact rational, correct for magnitudes far outside
/// the range of either part.
double to_double(const Rational &r);

/// Chebyshev polynomial of the first kind: cos(m acos x) on [-1, 1],
/// cosh(m acosh x) above 1 and the parity rule below -1.
double chebyshev(unsigned m, double x);

/// P(x) = T_m((n+1-2x)/(n-1)) / T_m((n+1)/(n-1)) with exact coefficients.
/// Internally P = Q / Q(0) where Q(x) = (n-1)^m T_m((n+1-2x)/(n-1)) has
/// integer coefficients.
struct AgspPolynomial {
    size_t n = 0;
    size_t m = 0;
    /// Coefficients of Q, lowest degree first.
    std::vector<BigInt> q;

    const BigInt &normalizer() const { return q.front(); }
    /// a_k = q_k / Q(0).
    Rational coefficient(size_t k) const;
    std::vector<Rational> coefficients() const;
    /// Exact value at a rational point by the three-term recurrence at that
    /// point (independent of the stored coefficients).
    Rational evaluate_exact(const Rational &x) const;
    /// Floating evaluation through chebyshev().
    double evaluate(double x) const;
};

/// Requires n >= 2 and 1 <= m < n.
AgspPolynomial build_polynomial(size_t n, size_t m);

/// True iff sign(a_k) = (-1)^k for every k (no zero coefficients).
bool signs_alternate(const AgspPolynomial &poly);

/// 2 e^{-2m / sqrt(n)}.
double step_error_bound(size_t n, size_t m);

struct StepError {
    double sup = 0;
    size_t argmax = 0;
    double bound = 0;
    bool within_bound = false;
};
/// max over integers x in [1, n] of |P(x)|, evaluated exactly.
StepError step_error_sup(const AgspPolynomial &poly);

struct CoeffSumIdentity {
    /// sum_k |a_k| n^k from the coefficients.
    Rational sum;
    /// P(-n) from the point recurrence.
    Rational p_minus_n;
    bool exact_equal = false;
    double sum_value = 0;
    /// T_m((3n+1)/(n-1)) / T_m((n+1)/(n-1)) in floating point.
    double p_minus_n_cosh = 0;
    double relative_error = 0;
};
CoeffSumIdentity coeff_sum_identity(const AgspPolynomial &poly);

struct OperatorCheck {
    /// Largest diagonal entry of |P_0(G) - P(G)|, P_0 the indicator of 0.
    double deviation = 0;
    double deviation_at_ground = 0;
    double bound = 0;
    bool within_bound = false;
};
/// Dense diagonal check of ||(|0^n><0^n|) - P(G)|| for G = sum_i |1><1|_i.
/// Requires n <= 12.
OperatorCheck agsp_operator_check(size_t n, size_t m);

struct ComplexityBound {
    size_t n = 0;
    double d = 0;
    double epsilon = 0;
    double delta = 0;
    /// log2(d / max{n(delta + epsilon), 1}).
    double bound = 0;
    /// log_n(d) - 1/2, the distance exponent above sqrt(n).
    double alpha = 0;
    /// Smallest depth t for which 1/2 + exp(-n^alpha / 2^t) reaches 1 - delta,
    /// with the implicit constants set to one. Convention dependent; absent
    /// when alpha <= 0.
    std::optional<double> depth_threshold;
};
/// Requires 0 < d <= n and nonnegative epsilon, delta.
ComplexityBound complexity_bound(size_t n, double d, double epsilon, double delta);

/// 1 / (2 acosh((3n+1)/(n-1))): the largest c for which e^{m acosh(.)} eps
/// stays below sqrt(eps) at m = c ln(1/eps).
double default_degree_constant(size_t n);
/// min{d - 1, floor(c ln(1/eps))}, at least 1.
size_t select_degree(size_t n, size_t d, double epsilon, std::optional<double> c = std::nullopt);

/// Max of |<V>_plus - <V>_minus| / 2^{a - n/2} over every Pauli V of support
/// a <= max_support plus `random_samples` Gaussian Hermitian V of random
/// support size, where plus/minus are the two orthogonal ZX-cat states.
WitnessReport local_indist_scan(size_t n, size_t max_support, uint64_t seed, size_t random_samples = 200);

}  // namespace magiclab

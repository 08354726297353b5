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

#include "magiclab/agsp.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "magiclab/statevec.h"
#include "magiclab/zxcat.h"

namespace magiclab {

namespace {

/// N_m at the point with p = n + 1 - 2x, where N_0 = 1, N_1 = p and
/// N_{k+1} = 2 p N_k - (n-1)^2 N_{k-1}.
template <typename T>
T recurrence_at(size_t n, size_t m, const T &p) {
    T prev = 1;
    T cur = p;
    if (m == 0) {
        return prev;
    }
    T c = T((n - 1) * (n - 1));
    for (size_t k = 1; k < m; k++) {
        T next = 2 * p * cur - c * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

double to_double(const Rational &r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (num == 0) {
        return 0.0;
    }
    bool negative = num < 0;
    if (negative) {
        num = -num;
    }
    long shift = static_cast<long>(msb(num)) - static_cast<long>(msb(den));
    // Scale so the integer quotient carries 64 significant bits.
    long scale = 64 - shift;
    BigInt q = scale >= 0 ? BigInt((num << scale) / den) : BigInt(num / (den << -scale));
    double out = std::ldexp(static_cast<double>(q), static_cast<int>(-scale));
    return negative ? -out : out;
}

double chebyshev(unsigned m, double x) {
    double md = static_cast<double>(m);
    if (std::abs(x) <= 1) {
        return std::cos(md * std::acos(x));
    }
    if (x > 1) {
        return std::cosh(md * std::acosh(x));
    }
    double v = std::cosh(md * std::acosh(-x));
    return (m % 2) ? -v : v;
}

Rational AgspPolynomial::coefficient(size_t k) const { return Rational(q.at(k), normalizer()); }

std::vector<Rational> AgspPolynomial::coefficients() const {
    std::vector<Rational> out;
    out.reserve(q.size());
    for (size_t k = 0; k < q.size(); k++) {
        out.push_back(coefficient(k));
    }
    return out;
}

Rational AgspPolynomial::evaluate_exact(const Rational &x) const {
    Rational p = Rational(n + 1) - 2 * x;
    return recurrence_at<Rational>(n, m, p) / Rational(normalizer());
}

double AgspPolynomial::evaluate(double x) const {
    double nd = static_cast<double>(n);
    return chebyshev(static_cast<unsigned>(m), (nd + 1 - 2 * x) / (nd - 1)) /
           chebyshev(static_cast<unsigned>(m), (nd + 1) / (nd - 1));
}

AgspPolynomial build_polynomial(size_t n, size_t m) {
    if (n < 2 || m < 1 || m >= n) {
        throw std::invalid_argument("build_polynomial: need n >= 2 and 1 <= m < n");
    }
    // Polynomial recurrence with the affine map (n+1) - 2x folded in.
    std::vector<BigInt> prev = {1};
    std::vector<BigInt> cur = {BigInt(n + 1), BigInt(-2)};
    BigInt c = BigInt(n - 1) * BigInt(n - 1);
    for (size_t k = 1; k < m; k++) {
        std::vector<BigInt> next(cur.size() + 1, 0);
        for (size_t j = 0; j < cur.size(); j++) {
            next[j] += 2 * BigInt(n + 1) * cur[j];
            next[j + 1] -= 4 * cur[j];
        }
        for (size_t j = 0; j < prev.size(); j++) {
            next[j] -= c * prev[j];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    AgspPolynomial poly;
    poly.n = n;
    poly.m = m;
    poly.q = std::move(cur);
    return poly;
}

bool signs_alternate(const AgspPolynomial &poly) {
    int sign0 = poly.q.front().sign();
    for (size_t k = 0; k < poly.q.size(); k++) {
        int expected = (k % 2 == 0) ? sign0 : -sign0;
        if (poly.q[k].sign() != expected || expected == 0) {
            return false;
        }
    }
    return true;
}

double step_error_bound(size_t n, size_t m) {
    return 2 * std::exp(-2 * static_cast<double>(m) / std::sqrt(static_cast<double>(n)));
}

StepError step_error_sup(const AgspPolynomial &poly) {
    StepError out;
    out.bound = step_error_bound(poly.n, poly.m);
    BigInt best = -1;
    for (size_t x = 1; x <= poly.n; x++) {
        BigInt p = BigInt(poly.n + 1) - 2 * BigInt(x);
        BigInt v = abs(recurrence_at<BigInt>(poly.n, poly.m, p));
        if (v > best) {
            best = v;
            out.argmax = x;
        }
    }
    out.sup = to_double(Rational(best, poly.normalizer()));
    out.within_bound = out.sup <= out.bound;
    return out;
}

CoeffSumIdentity coeff_sum_identity(const AgspPolynomial &poly) {
    CoeffSumIdentity out;
    BigInt power = 1;
    BigInt total = 0;
    for (const auto &qk : poly.q) {
        total += abs(qk) * power;
        power *= poly.n;
    }
    out.sum = Rational(total, poly.normalizer());
    BigInt p = BigInt(3 * poly.n + 1);
    out.p_minus_n = Rational(recurrence_at<BigInt>(poly.n, poly.m, p), poly.normalizer());
    out.exact_equal = out.sum == abs(out.p_minus_n);
    out.sum_value = to_double(out.sum);
    double nd = static_cast<double>(poly.n);
    out.p_minus_n_cosh = chebyshev(static_cast<unsigned>(poly.m), (3 * nd + 1) / (nd - 1)) /
                         chebyshev(static_cast<unsigned>(poly.m), (nd + 1) / (nd - 1));
    out.relative_error = std::abs(out.sum_value - std::abs(out.p_minus_n_cosh)) / out.sum_value;
    return out;
}

OperatorCheck agsp_operator_check(size_t n, size_t m) {
    if (n > kMaxDensityQubits) {
        throw std::length_error("agsp_operator_check: n must be at most 12");
    }
    AgspPolynomial poly = build_polynomial(n, m);
    size_t dim = size_t{1} << n;
    // Diagonal of G is the Hamming weight of the basis index.
    std::vector<double> diag_deviation(dim);
    for (size_t i = 0; i < dim; i++) {
        size_t weight = static_cast<size_t>(std::popcount(i));
        Rational step = weight == 0 ? Rational(1) : Rational(0);
        diag_deviation[i] = to_double(abs(step - poly.evaluate_exact(Rational(weight))));
    }
    OperatorCheck out;
    out.deviation_at_ground = diag_deviation[0];
    out.deviation = *std::max_element(diag_deviation.begin(), diag_deviation.end());
    out.bound = step_error_bound(n, m);
    out.within_bound = out.deviation <= out.bound;
    return out;
}

ComplexityBound complexity_bound(size_t n, double d, double epsilon, double delta) {
    if (n < 2 || !(d > 0) || d > static_cast<double>(n) || epsilon < 0 || delta < 0) {
        throw std::invalid_argument("complexity_bound: need 0 < d <= n, n >= 2 and nonnegative errors");
    }
    ComplexityBound out;
    out.n = n;
    out.d = d;
    out.epsilon = epsilon;
    out.delta = delta;
    double nd = static_cast<double>(n);
    out.bound = std::log2(d / std::max(nd * (delta + epsilon), 1.0));
    out.alpha = std::log(d) / std::log(nd) - 0.5;
    if (out.alpha > 0) {
        if (delta >= 0.5) {
            out.depth_threshold = 0.0;
        } else {
            double t = std::log2(std::pow(nd, out.alpha) / std::log(1 / (0.5 - delta)));
            out.depth_threshold = std::max(0.0, std::ceil(t));
        }
    }
    return out;
}

double default_degree_constant(size_t n) {
    double nd = static_cast<double>(n);
    return 1 / (2 * std::acosh((3 * nd + 1) / (nd - 1)));
}

size_t select_degree(size_t n, size_t d, double epsilon, std::optional<double> c) {
    if (d < 2 || !(epsilon > 0) || epsilon >= 1) {
        throw std::invalid_argument("select_degree: need d >= 2 and 0 < epsilon < 1");
    }
    double cc = c.value_or(default_degree_constant(n));
    double m = std::floor(cc * std::log(1 / epsilon));
    return std::max<size_t>(1, std::min<size_t>(d - 1, static_cast<size_t>(m)));
}

WitnessReport local_indist_scan(size_t n, size_t max_support, uint64_t seed, size_t random_samples) {
    if (max_support == 0 || max_support > n) {
        throw std::invalid_argument("local_indist_scan: support size must lie in [1, n]");
    }
    StateVector plus = build_zxcat(n, ZxVariant::Plus);
    StateVector minus = build_zxcat(n, ZxVariant::Minus);
    double half_n = static_cast<double>(n) / 2;
    double max_ratio = 0;
    double max_diff = 0;
    size_t scanned = 0;
    std::string worst;

    // Every support of size <= max_support, every non-identity letter pattern.
    std::vector<size_t> support;
    auto visit_support = [&](const std::vector<size_t> &supp) {
        size_t a = supp.size();
        size_t patterns = size_t{1} << (2 * a);
        for (size_t pat = 0; pat < patterns; pat++) {
            std::string text(n, 'I');
            bool full = true;
            for (size_t k = 0; k < a; k++) {
                char c = "IXYZ"[(pat >> (2 * k)) & 3];
                full &= c != 'I';
                text[supp[k]] = c;
            }
            if (!full) {
                continue;
            }
            PauliString p = PauliString::from_text(text);
            double diff = std::abs(pauli_expectation(plus, p) - pauli_expectation(minus, p));
            double ratio = diff / std::exp2(static_cast<double>(a) - half_n);
            scanned++;
            max_diff = std::max(max_diff, diff);
            if (ratio > max_ratio) {
                max_ratio = ratio;
                worst = p.str();
            }
        }
    };
    std::function<void(size_t)> recurse = [&](size_t start) {
        if (!support.empty()) {
            visit_support(support);
        }
        if (support.size() == max_support) {
            return;
        }
        for (size_t q = start; q < n; q++) {
            support.push_back(q);
            recurse(q + 1);
            support.pop_back();
        }
    };
    recurse(0);

    Rng rng(seed);
    std::vector<size_t> qubits(n);
    for (size_t s = 0; s < random_samples; s++) {
        size_t a = 1 + rng.below(max_support);
        std::iota(qubits.begin(), qubits.end(), size_t{0});
        std::shuffle(qubits.begin(), qubits.end(), rng.engine());
        std::vector<size_t> supp(qubits.begin(), qubits.begin() + static_cast<std::ptrdiff_t>(a));
        Eigen::MatrixXcd v = random_hermitian_unit(size_t{1} << a, rng);
        StateVector vp = plus;
        vp.apply_matrix(v, supp);
        StateVector vm = minus;
        vm.apply_matrix(v, supp);
        double diff = std::abs(plus.inner(vp).real() - minus.inner(vm).real());
        double ratio = diff / std::exp2(static_cast<double>(a) - half_n);
        scanned++;
        max_diff = std::max(max_diff, diff);
        if (ratio > max_ratio) {
            max_ratio = ratio;
            worst = "random Hermitian on " + std::to_string(a) + " qubits";
        }
    }

    WitnessReport report;
    report.name = "local_indistinguishability";
    report.set("n", static_cast<double>(n));
    report.set("max_support", static_cast<double>(max_support));
    report.set("operators_scanned", static_cast<double>(scanned));
    report.set("max_difference", max_diff);
    report.observed = max_ratio;
    report.bound = 8.0;
    report.pass = max_ratio <= 8.0;
    report.note = "largest ratio at " + worst;
    return report;
}

}  // namespace magiclab

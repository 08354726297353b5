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
#include <ostream>
#include <string>

namespace magiclab {

/// Exact element a + b phi of Q(phi), phi = (1 + sqrt 5) / 2.
class GoldenNumber {
   public:
    using Rational = boost::multiprecision::cpp_rational;

    GoldenNumber() = default;
    GoldenNumber(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    GoldenNumber(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT

    static GoldenNumber phi() { return GoldenNumber(0, 1); }

    const Rational &a() const { return a_; }
    const Rational &b() const { return b_; }

    /// Galois conjugate a + b(1 - phi).
    GoldenNumber conjugate() const { return GoldenNumber(a_ + b_, -b_); }
    /// Field norm (a + b phi)(a + b - b phi) = a^2 + ab - b^2.
    Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    /// Sign of the real number a + b phi, decided exactly.
    int sign() const;
    double to_double() const;
    std::string str() const;

    /// Throws std::domain_error on zero.
    GoldenNumber inverse() const;
    GoldenNumber pow(int e) const;

    GoldenNumber operator-() const { return GoldenNumber(-a_, -b_); }
    GoldenNumber &operator+=(const GoldenNumber &o);
    GoldenNumber &operator-=(const GoldenNumber &o);
    GoldenNumber &operator*=(const GoldenNumber &o);
    GoldenNumber &operator/=(const GoldenNumber &o) { return *this *= o.inverse(); }

    friend GoldenNumber operator+(GoldenNumber l, const GoldenNumber &r) { return l += r; }
    friend GoldenNumber operator-(GoldenNumber l, const GoldenNumber &r) { return l -= r; }
    friend GoldenNumber operator*(GoldenNumber l, const GoldenNumber &r) { return l *= r; }
    friend GoldenNumber operator/(GoldenNumber l, const GoldenNumber &r) { return l /= r; }
    bool operator==(const GoldenNumber &o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator<(const GoldenNumber &o) const { return (*this - o).sign() < 0; }

   private:
    Rational a_ = 0;
    Rational b_ = 0;
};

std::ostream &operator<<(std::ostream &out, const GoldenNumber &g);

}  // namespace magiclab

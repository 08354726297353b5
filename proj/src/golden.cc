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

#include "magiclab/golden.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "magiclab/agsp.h"

namespace magiclab {

int GoldenNumber::sign() const {
    // a + b phi = (2a + b)/2 + b sqrt(5)/2; compare (2a + b) against -b sqrt(5).
    Rational p = 2 * a_ + b_;
    int sp = p > 0 ? 1 : (p < 0 ? -1 : 0);
    int sq = b_ > 0 ? 1 : (b_ < 0 ? -1 : 0);
    if (sp == 0) {
        return sq;
    }
    if (sq == 0 || sp == sq) {
        return sp;
    }
    Rational lhs = p * p;
    Rational rhs = 5 * b_ * b_;
    if (lhs == rhs) {
        return 0;
    }
    return lhs > rhs ? sp : sq;
}

double GoldenNumber::to_double() const {
    const double phi = (1 + std::sqrt(5.0)) / 2;
    return magiclab::to_double(a_) + magiclab::to_double(b_) * phi;
}

std::string GoldenNumber::str() const {
    std::ostringstream out;
    out << *this;
    return out.str();
}

GoldenNumber GoldenNumber::inverse() const {
    Rational n = norm();
    if (n == 0) {
        throw std::domain_error("GoldenNumber: division by zero");
    }
    GoldenNumber c = conjugate();
    return GoldenNumber(c.a_ / n, c.b_ / n);
}

GoldenNumber GoldenNumber::pow(int e) const {
    GoldenNumber base = e < 0 ? inverse() : *this;
    unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    GoldenNumber out(1);
    while (k) {
        if (k & 1) {
            out *= base;
        }
        base *= base;
        k >>= 1;
    }
    return out;
}

GoldenNumber &GoldenNumber::operator+=(const GoldenNumber &o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

GoldenNumber &GoldenNumber::operator-=(const GoldenNumber &o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

GoldenNumber &GoldenNumber::operator*=(const GoldenNumber &o) {
    // phi^2 = phi + 1
    Rational bb = b_ * o.b_;
    Rational a = a_ * o.a_ + bb;
    Rational b = a_ * o.b_ + b_ * o.a_ + bb;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

std::ostream &operator<<(std::ostream &out, const GoldenNumber &g) {
    return out << g.a() << (g.b() < 0 ? " - " : " + ") << abs(g.b()) << " phi";
}

}  // namespace magiclab

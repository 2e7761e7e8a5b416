/*
   Copyright 2026 The kappa-feq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>

#include "kappafeq/poly.hpp"

namespace kappafeq {

/// Element of the rational function field Q(t).
///
/// Always held in canonical form: gcd(num, den) = 1, den monic and nonzero,
/// zero is 0/1. Equality is therefore plain structural equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(const Rational& constant) : num_(constant), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
    explicit RatFunc(Poly num, Poly den = Poly(Rational(1)));

    /// The field generator t.
    static RatFunc variable();

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& rhs);
    RatFunc& operator-=(const RatFunc& rhs);
    RatFunc& operator*=(const RatFunc& rhs);
    RatFunc& operator/=(const RatFunc& rhs);  // throws DivisionByZero

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    /// Integer power; negative exponents require a nonzero base.
    RatFunc pow(long e) const;

    /// d/dt by the quotient rule.
    RatFunc derivative() const;

    std::string to_string() const;

    bool operator==(const RatFunc&) const = default;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

/// f with t replaced by `point` (composition in Q(t)); throws DivisionByZero
/// when the substituted denominator vanishes identically.
RatFunc substitute(const RatFunc& f, const RatFunc& point);

}  // namespace kappafeq

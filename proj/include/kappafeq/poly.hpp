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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kappafeq/rational.hpp"

namespace kappafeq {

/// Univariate polynomial over the rationals in the indeterminate `t`.
///
/// Coefficients are stored by ascending exponent with a nonzero leading
/// coefficient; the zero polynomial is the empty sequence and reports no
/// degree at all rather than a numeric placeholder.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& constant);

    /// The monomial t.
    static Poly variable();
    /// c * t^k.
    static Poly monomial(const Rational& c, int k);
    /// Coefficients by ascending exponent; trailing zeros are trimmed.
    static Poly from_coeffs(std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    /// Degree, or nullopt for the zero polynomial.
    std::optional<int> degree() const;

    /// Coefficient of t^k (zero outside the stored range).
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    const Rational& leading_coeff() const;  // requires !is_zero()
    Poly monic() const;                     // requires !is_zero()

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    /// Quotient and remainder; throws DivisionByZero when divisor is zero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    Poly pow(int e) const;  // e >= 0

    Rational eval(const Rational& x) const;
    Poly derivative() const;

    std::string to_string() const;

    bool operator==(const Poly&) const = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd over Q[t]; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Composition p(q(t)).
Poly substitute(const Poly& p, const Poly& q);

}  // namespace kappafeq

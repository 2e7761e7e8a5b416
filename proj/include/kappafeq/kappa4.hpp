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

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "kappafeq/rational.hpp"

namespace kappafeq {

/// Formal combinations of terms  x^p * B(x^u, x^v)  (u >= v >= 1) in the
/// symmetric biadditive unknown B of the n = 3, kappa = 4 branch. In that
/// branch A(z, 1, 1) = 0 for every z, so any B slot holding 1 kills the term;
/// `add` applies that reduction.
class BForm {
public:
    void add(int outer_pow, int u, int v, const Rational& coeff);
    bool is_zero() const { return terms_.empty(); }

    const std::map<std::tuple<int, int, int>, Rational>& terms() const { return terms_; }
    Rational coeff(int outer_pow, int u, int v) const;

    BForm& operator+=(const BForm& rhs);
    BForm& operator*=(const Rational& c);
    friend BForm operator+(BForm a, const BForm& b) { return a += b; }
    friend BForm operator*(BForm a, const Rational& c) { return a *= c; }
    friend BForm operator*(const Rational& c, BForm a) { return a *= c; }

    /// Every x and B-argument power doubled: the value at x^2.
    BForm at_square() const;

    /// Multiplies by x^p.
    BForm shifted_out(int p) const;

    /// x -> x+1 expanded binomially (outer power and both B slots), keeping
    /// only terms of total degree d = p + u + v.
    BForm translate_collect(int d) const;

    /// Integer coefficients with content 1, sign preserved.
    BForm cleared() const;
    /// cleared(), then sign fixed so the coefficient on `key` is positive.
    BForm cleared_positive_on(int outer_pow, int u, int v) const;

    /// Coefficients listed on an explicit monomial basis; throws InvalidInput
    /// if any term lies outside the basis.
    std::vector<Rational> on_basis(
        const std::vector<std::tuple<int, int, int>>& basis) const;

    std::string to_string() const;
    bool operator==(const BForm&) const = default;

private:
    std::map<std::tuple<int, int, int>, Rational> terms_;
};

std::string b_monomial_to_string(int outer_pow, int u, int v);

/// The display order of the degree-4 B-monomials used for the elimination:
/// B(x^2,x^2), x*B(x^2,x), B(x^3,x), x^2*B(x,x).
const std::vector<std::tuple<int, int, int>>& kappa4_fourth_basis();

/// Everything the n = 3, kappa = 4 elimination produces.
struct Kappa4Report {
    std::string diagonal_rep;   // A(x,x,x) in terms of B
    BForm g;                    // the degree-6 identity, normalized
    BForm eq_fourth;            // fourth-degree terms of the translate of g
    BForm eq_fourth2;           // fourth-degree combination, in B
    std::vector<Rational> eq_fourth_vec;   // on kappa4_fourth_basis()
    std::vector<Rational> eq_fourth2_vec;  // on kappa4_fourth_basis()
    std::array<Rational, 2> elimination;   // (c1, c2): c1*eq_fourth + c2*eq_fourth2
    BForm eliminated;                      // the combination; only B(x^2,x^2) survives
    Rational b4_unit_trace_coeff;          // B4(x,y,1,1) = coeff * B(x,y)
    std::vector<std::string> log;
    std::string verdict;                   // "IdenticallyZero"
};

/// Executes the elimination for f(x^2) = 4 x^3 f(x) on degree-3 monomials:
/// derives the B-representation of the diagonal, the degree-6 identity g, the
/// two fourth-degree equations, the exact combination isolating B(x^2,x^2),
/// and the lift step showing B vanishes.
Kappa4Report kappa4_pipeline();

}  // namespace kappafeq

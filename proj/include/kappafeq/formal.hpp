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

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "kappafeq/rational.hpp"

namespace kappafeq {

/// One formal term  coeff * x^p * A([x^2]_c2, [x]_c1, [1]_c0)  of the shifted
/// expansion, with c2 + c1 + c0 = n. Scalar multipliers inside slots are
/// always extracted into the coefficient, so terms merge by (p, c2, c1).
struct FormalTerm {
    Rational coeff;
    int outer_pow = 0;
    int c2 = 0;
    int c1 = 0;
    int c0 = 0;

    /// Degree of the induced one-variable monomial: p + 2*c2 + c1.
    int degree() const { return outer_pow + 2 * c2 + c1; }

    std::string to_string() const;
};

/// Canonical merged sum of formal terms for a fixed arity n: no duplicate
/// (p, c2, c1) keys, no zero coefficients.
class FormalPoly {
public:
    explicit FormalPoly(int n) : n_(n) {}

    int arity() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add(const FormalTerm& term);
    Rational coeff(int outer_pow, int c2, int c1) const;

    std::vector<FormalTerm> terms() const;

    FormalPoly& operator+=(const FormalPoly& rhs);
    FormalPoly& operator-=(const FormalPoly& rhs);
    FormalPoly& operator*=(const Rational& c);
    friend FormalPoly operator+(FormalPoly a, const FormalPoly& b) { return a += b; }
    friend FormalPoly operator-(FormalPoly a, const FormalPoly& b) { return a -= b; }

    std::string to_string() const;

    bool operator==(const FormalPoly&) const = default;

private:
    int n_;
    // (outer_pow, c2, c1) -> coefficient
    std::map<std::tuple<int, int, int>, Rational> terms_;
};

/// Raw term list of the shift expansion before merging: first the A-side over
/// all slot compositions (with multinomial coefficients and the scalar 2 per
/// doubled slot extracted), then the product side -kappa * x^b * A([x]_g, [1]_{n-g}).
std::vector<FormalTerm> expand_shifted_terms(int n, const Rational& kappa);

/// The full shifted expansion of f(x^2) - kappa * x^n f(x) as a canonical
/// FormalPoly; identically zero as a function of x whenever f solves the
/// equation, so every degree component must vanish.
FormalPoly expand_shifted(int n, const Rational& kappa);

/// Terms of degree exactly k (0 <= k <= 2n).
FormalPoly collect_degree(const FormalPoly& P, int k);

/// Degree-k component rearranged as
///   binom(n,k) * (2^k - kappa) * A([x]_k, [1]_{n-k})  =  rhs,
/// where rhs collects every mixed term (strictly fewer than k plain slots or
/// a positive outer power) with the sign it takes on the right.
struct RecursionEq {
    int n = 0;
    int k = 0;
    Rational kappa;
    Rational lhs_coeff;
    FormalPoly rhs{1};

    std::string to_string() const;
};

RecursionEq derive_recursion(int n, const Rational& kappa, int k);

}  // namespace kappafeq

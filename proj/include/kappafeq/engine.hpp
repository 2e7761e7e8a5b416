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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kappafeq/formal.hpp"
#include "kappafeq/sym_form.hpp"

namespace kappafeq {

/// Coefficients lambda_{k,j} expressing the partial diagonals in the
/// kappa = 2 branch: A([x]_k, [1]_{n-k}) = sum_j lambda_{k,j} x^{k-j} a(x^j).
/// rows[k-1] holds (lambda_{k,1}, ..., lambda_{k,k}); lambda_{1,1} = 1 by the
/// normalization a(x) := A([x]_1, [1]_{n-1}).
struct LambdaTable {
    std::vector<std::vector<Rational>> rows;

    const std::vector<Rational>& row(int k) const;
    std::string to_string() const;
    bool operator==(const LambdaTable&) const = default;
};

/// A one-variable identity  sum_j coeffs[j] * x^{degree-j} * a(x^j) = 0
/// constraining an additive map a. Keys run over the a-powers j, highest
/// first.
struct IdentityCoeffs {
    int degree = 0;
    std::map<int, Rational, std::greater<int>> coeffs;

    /// Scaled to integer coefficients with content 1 and a positive
    /// coefficient on the highest a-power.
    IdentityCoeffs cleared() const;
    /// Scaled so the coefficient on the highest a-power is 1.
    IdentityCoeffs normalized() const;
    /// Integer coefficient list by descending j over the nonzero support.
    std::vector<BigInt> cleared_vector() const;

    std::string to_string() const;
    bool operator==(const IdentityCoeffs&) const = default;
};

/// What is known about one partial diagonal x -> A([x]_l, [1]_{n-l}) during
/// the inductions: identically zero, f(1) * x^l, or a lambda-row combination.
struct DiagonalRule {
    enum class Kind { Zero, UnitPower, LambdaRow };
    Kind kind = Kind::Zero;
    int index = 0;                    // l, the number of filled slots
    std::vector<Rational> lambda_row; // for LambdaRow, size = index

    static DiagonalRule zero(int index) { return {Kind::Zero, index, {}}; }
    static DiagonalRule unit_power(int index) { return {Kind::UnitPower, index, {}}; }
    static DiagonalRule lambda(std::vector<Rational> row);
};

/// A one-variable combination produced by substituting concrete arguments
/// into the symmetric multilinear extension of a known diagonal:
///   unit_coeff * f(1) * x^degree  +  sum_j a_coeffs[j] * x^{degree-j} * a(x^j).
struct ExtendedDiagonal {
    int degree = 0;
    Rational unit_coeff;
    std::map<int, Rational> a_coeffs;
};

/// Substitutes the argument multiset (count_x2 copies of x^2, count_x copies
/// of x) into the multilinear extension of `rule`, enumerating block
/// assignments with exact hypergeometric multiplicities. Throws ArityMismatch
/// when the multiset size differs from the rule's index (induction order
/// violated).
ExtendedDiagonal extend_multilinear(const DiagonalRule& rule, int count_x2, int count_x);

/// Runs the kappa = 2 induction k = 1..n: rewrites the right-hand side of
/// each recursion step through the rows already known and divides by
/// binom(n,k) * (2^k - 2).
LambdaTable solve_lambda(int n);

/// The constraint on a obtained by feeding the row-n representation back into
/// the equation with kappa = 2:
///   sum_j lambda_{n,j} x^{2n-2j} a(x^{2j}) - sum_j 2 lambda_{n,j} x^{2n-j} a(x^j) = 0,
/// merged on x^{2n-j} a(x^j).
IdentityCoeffs residual_identity(int n, const LambdaTable& table);

/// The shift-difference reduction of the degree-6 residual identity for
/// n = 3. Substituting x -> x+1, expanding a-arguments binomially (a(1) = 0
/// is forced by the input identity at x = 1), subtracting the original and
/// clearing integer content leaves a mix of fifth- and fourth-degree terms;
/// the fourth-degree component normalizes to the order-3 certificate.
struct ReduceOrderReport {
    IdentityCoeffs input;
    /// (outer power p, a-power i) -> integer coefficient, content-cleared.
    std::map<std::pair<int, int>, Rational> shifted_mix;
    std::string shifted_mix_text;
    IdentityCoeffs fourth_degree;  // cleared
    IdentityCoeffs normalized;     // leading coefficient 1
};

ReduceOrderReport reduce_order_n3_report(const IdentityCoeffs& identity);
IdentityCoeffs reduce_order_n3(const IdentityCoeffs& identity);

struct VerifyResult {
    bool holds = true;
    std::optional<RatFunc> witness;
    std::optional<RatFunc> residual;
    /// Checks are falsification on the sample set, not proofs.
    std::string label = "holds on sample set";
};

/// Checks trace(F, x^2) - kappa * x^n * trace(F, x) = 0 exactly at every
/// sample (the generic point t is always included).
VerifyResult verify_solution(int n, const Rational& kappa, const SymForm& F,
                             std::span<const RatFunc> samples);
VerifyResult verify_solution(int n, const Rational& kappa, const SymForm& F);

}  // namespace kappafeq

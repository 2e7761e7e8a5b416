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

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kappafeq/additive_map.hpp"

namespace kappafeq {

/// One product shape inside a symmetric form: a partition of the argument
/// slots {0..n-1} into blocks, each block fed through an additive map after
/// its slot arguments are multiplied together.
struct BlockPattern {
    int arity = 0;
    /// Disjoint, sorted slot index lists covering {0..n-1} exactly once.
    std::vector<std::pair<std::vector<int>, AdditiveMap>> blocks;

    /// One singleton block per map, in order.
    static BlockPattern product_of(const std::vector<AdditiveMap>& maps);
    /// A single block holding all slots.
    static BlockPattern single_block(int arity, const AdditiveMap& map);

    /// Sorts slot lists and blocks; throws InvalidInput unless the blocks
    /// partition {0..arity-1}.
    void canonicalize();

    std::string to_string() const;
    bool operator==(const BlockPattern&) const = default;
};

/// Symmetric n-additive form: a rational combination of block patterns,
/// evaluated with explicit symmetrization over all n! slot permutations.
class SymForm {
public:
    explicit SymForm(int arity);

    /// x1 * x2 * ... * xn (identity map on every singleton block).
    static SymForm monomial_product(int n);
    /// a tensor a tensor ... (n singleton blocks, all mapped by `a`).
    static SymForm map_power(int n, const AdditiveMap& a);
    static SymForm single(int arity, const Rational& coeff, BlockPattern pattern);

    int arity() const { return arity_; }
    const std::vector<std::pair<Rational, BlockPattern>>& terms() const { return terms_; }

    /// Drops zero coefficients, merges equal patterns, sorts terms.
    void canonicalize();
    void add_term(const Rational& coeff, BlockPattern pattern);

    /// (1/n!) * sum over all slot permutations of the pattern products.
    /// Throws ArityMismatch unless |args| = arity.
    RatFunc evaluate(std::span<const RatFunc> args) const;

    /// evaluate at n copies of x.
    RatFunc trace(const RatFunc& x) const;

    /// evaluate at k copies of x and n-k copies of 1 (0 <= k <= n).
    RatFunc partial_trace(int k, const RatFunc& x) const;

    SymForm& operator+=(const SymForm& rhs);
    SymForm& operator*=(const Rational& c);
    friend SymForm operator+(SymForm a, const SymForm& b) { return a += b; }
    friend SymForm operator*(SymForm a, const Rational& c) { return a *= c; }
    friend SymForm operator*(const Rational& c, SymForm a) { return a *= c; }

    std::string to_string() const;

    bool operator==(const SymForm&) const = default;

private:
    int arity_;
    std::vector<std::pair<Rational, BlockPattern>> terms_;
};

/// The 4-additive lift of a biadditive form:
///   B4(x1,x2,x3,x4) = (1/3) [B(x1x2, x3x4) + B(x1x3, x2x4) + B(x1x4, x2x3)].
/// Requires arity(B) = 2; the result satisfies trace(B4, x) = B(x^2, x^2).
SymForm b4_lift(const SymForm& B);

/// The symmetrized multiplicative constraint over S_{n+1}:
///   sum over permutations sigma of
///     F(x_s1 * x_s2, x_s3, ...) - x_s1 * F(x_s2, ...) - x_s2 * F(x_s1, x_s3, ...).
/// Requires |args| = arity(F) + 1.
RatFunc s_constraint_defect(const SymForm& F, std::span<const RatFunc> args);

/// Realizes sum_j row[j-1] * x^{n-j} a(x^j) as a form of arity n = row.size():
/// for each j one term with n-j identity singleton blocks and one j-slot
/// block mapped by `a`.
SymForm lambda_family_form(const std::vector<Rational>& row, const AdditiveMap& a);

}  // namespace kappafeq

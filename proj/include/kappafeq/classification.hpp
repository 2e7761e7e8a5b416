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
#include <vector>

#include <json.hpp>

#include "kappafeq/engine.hpp"

namespace kappafeq {

/// Outcome branches for f(x^2) = kappa * x^n * f(x) on degree-n monomials.
enum class Branch {
    IdenticallyZero,   // kappa outside {2^k : 0 <= k <= n}, or the n=3, kappa=4 elimination
    ScalarPower,       // kappa = 1: f(x) = f(1) * x^n
    DerivationFamily,  // kappa = 2: lambda-representation through an additive a
    TopConstraint,     // kappa = 2^n (n >= 2): trace of a form obeying the S_{n+1} constraint
    OutsideTheorem,    // kappa = 2^k, 2 <= k <= n-1 (n >= 4, or k >= 3): induction obstructed
};

std::string branch_name(Branch b);

/// Classification result; the branch is a pure function of (n, kappa).
struct Classification {
    Branch branch = Branch::IdenticallyZero;
    int n = 0;
    Rational kappa;

    std::optional<int> order_bound;                 // DerivationFamily
    std::optional<LambdaTable> lambda_table;        // DerivationFamily
    std::optional<IdentityCoeffs> residual;         // DerivationFamily
    std::optional<IdentityCoeffs> order3_certificate;  // DerivationFamily, n = 3
    std::optional<std::string> constraint;          // TopConstraint
    std::optional<int> obstruction_k;               // OutsideTheorem
    std::vector<std::string> derivation_log;
};

Classification classify(int n, const Rational& kappa);

/// Deterministic serialization: exact rationals as strings, fixed key order,
/// no floating point.
nlohmann::ordered_json classification_to_json(const Classification& c);
std::string classification_to_text(const Classification& c);

}  // namespace kappafeq

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

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "kappafeq/sym_form.hpp"

namespace kappafeq {

/// A concrete one-variable function on Q(t), e.g. the trace of a form.
using PointFunction = std::function<RatFunc(const RatFunc&)>;

/// The difference operator: (delta(f, y))(x) = f(x + y) - f(x).
PointFunction delta(PointFunction f, RatFunc y);

/// Left fold of delta over the increments.
PointFunction delta_iter(PointFunction f, std::vector<RatFunc> ys);

/// Deterministic pool of evaluation points: the base samples plus small
/// integer combinations of them, drawn with a seeded generator so runs are
/// reproducible. A failing tuple under exact arithmetic is a hard
/// counterexample.
class TrialPool {
public:
    explicit TrialPool(std::uint64_t seed);
    TrialPool(std::uint64_t seed, const std::vector<RatFunc>& base);

    const RatFunc& draw();
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::vector<RatFunc> pool_;
    std::mt19937_64 rng_;
};

/// Seed from KAPPA_FEQ_SEED when set, else the fixed default.
std::uint64_t trial_seed();

struct PolarizationResult {
    bool ok = true;
    int failed_trial = -1;
    std::optional<RatFunc> point;            // x of the failing tuple
    std::vector<RatFunc> increments;         // y_1 .. y_n of the failing tuple
    std::optional<RatFunc> lhs;
    std::optional<RatFunc> rhs;
};

/// For `trials` random tuples (x, y_1..y_n): checks the polarization identity
///   delta_{y_1..y_n} trace(F, .)(x) = n! * evaluate(F, y_1..y_n)
/// and that the (n+1)-fold difference vanishes. Exact; stops at the first
/// counterexample.
PolarizationResult polarization_check(const SymForm& F, int trials, TrialPool& pool);
PolarizationResult polarization_check(const SymForm& F, int trials);

}  // namespace kappafeq

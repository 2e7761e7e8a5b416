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

#include "kappafeq/diff_calculus.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "kappafeq/samples.hpp"

namespace kappafeq {

PointFunction delta(PointFunction f, RatFunc y) {
    return [f = std::move(f), y = std::move(y)](const RatFunc& x) {
        return f(x + y) - f(x);
    };
}

PointFunction delta_iter(PointFunction f, std::vector<RatFunc> ys) {
    for (auto& y : ys) f = delta(std::move(f), std::move(y));
    return f;
}

TrialPool::TrialPool(std::uint64_t seed) : TrialPool(seed, default_samples()) {}

TrialPool::TrialPool(std::uint64_t seed, const std::vector<RatFunc>& base)
    : seed_(seed), rng_(seed) {
    pool_ = base;
    // Small integer combinations are formed among the low-degree elements
    // only; the heavier base samples still appear as single points.
    const auto small = [](const RatFunc& v) {
        const int nd = v.num().degree().value_or(0);
        const int dd = v.den().degree().value_or(0);
        return nd + dd <= 2;
    };
    const std::size_t n = base.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!small(base[i])) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!small(base[j])) continue;
            pool_.push_back(base[i] + base[j]);
            pool_.push_back(base[i] - base[j]);
        }
        for (long c : {-2L, 3L}) {
            pool_.push_back(RatFunc(Rational(c)) * base[i]);
        }
    }
    std::erase_if(pool_, [](const RatFunc& v) { return v.is_zero(); });
}

const RatFunc& TrialPool::draw() {
    std::uniform_int_distribution<std::size_t> dist(0, pool_.size() - 1);
    return pool_[dist(rng_)];
}

std::uint64_t trial_seed() {
    if (const char* env = std::getenv("KAPPA_FEQ_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0x5eedULL;
}

PolarizationResult polarization_check(const SymForm& F, int trials, TrialPool& pool) {
    const int n = F.arity();
    PolarizationResult result;
    const PointFunction tr = [&F](const RatFunc& x) { return F.trace(x); };
    const Rational nfact(factorial(n));

    for (int trial = 0; trial < trials; ++trial) {
        const RatFunc x = pool.draw();
        std::vector<RatFunc> ys;
        ys.reserve(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i < n; ++i) ys.push_back(pool.draw());

        RatFunc lhs = delta_iter(tr, ys)(x);
        RatFunc rhs = RatFunc(nfact) * F.evaluate(ys);
        if (lhs != rhs) {
            result.ok = false;
            result.failed_trial = trial;
            result.point = x;
            result.increments = ys;
            result.lhs = std::move(lhs);
            result.rhs = std::move(rhs);
            return result;
        }

        ys.push_back(pool.draw());
        RatFunc over = delta_iter(tr, ys)(x);
        if (!over.is_zero()) {
            result.ok = false;
            result.failed_trial = trial;
            result.point = x;
            result.increments = ys;
            result.lhs = std::move(over);
            result.rhs = RatFunc();
            return result;
        }
    }
    return result;
}

PolarizationResult polarization_check(const SymForm& F, int trials) {
    TrialPool pool(trial_seed());
    return polarization_check(F, trials, pool);
}

}  // namespace kappafeq

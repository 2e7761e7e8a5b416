#include <doctest.h>

#include "kappafeq/classification.hpp"
#include "kappafeq/diff_calculus.hpp"
#include "test_util.hpp"

// Cross-module consistency: the formal engine against concrete forms.

using namespace kappafeq;

namespace {
RatFunc t() { return RatFunc::variable(); }
RatFunc c(long v) { return RatFunc(Rational(v)); }
const AdditiveMap D = AdditiveMap::derivation(1);

// A formal term evaluated on a concrete form: coeff * x^p * F([x^2]_c2, [x]_c1, [1]_c0).
RatFunc term_on_form(const FormalTerm& term, const SymForm& F, const RatFunc& x) {
    std::vector<RatFunc> args;
    for (int i = 0; i < term.c2; ++i) args.push_back(x * x);
    for (int i = 0; i < term.c1; ++i) args.push_back(x);
    for (int i = 0; i < term.c0; ++i) args.push_back(c(1));
    return RatFunc(term.coeff) * x.pow(term.outer_pow) * F.evaluate(args);
}
}  // namespace

TEST_CASE("the shift expansion evaluates like the shifted equation") {
    // For any concrete symmetric form, the formal expansion must agree with
    // f((x+1)^2) - kappa * (x+1)^n * f(x+1) where f is the trace.
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const Rational kappa = testutil::random_rational(rng);
        const SymForm F = testutil::random_form(rng, n, 2);
        const FormalPoly P = expand_shifted(n, kappa);
        for (const RatFunc& x : {t(), c(1) / (t() + c(1))}) {
            RatFunc formal_value;
            for (const auto& term : P.terms()) formal_value += term_on_form(term, F, x);
            const RatFunc shifted = x + c(1);
            const RatFunc direct =
                F.trace(shifted * shifted) - RatFunc(kappa) * shifted.pow(n) * F.trace(shifted);
            CHECK(formal_value == direct);
        }
    }
}

TEST_CASE("recursion equations evaluate like their degree components") {
    std::mt19937_64 rng(73);
    const int n = 3;
    const Rational kappa(5);
    const SymForm F = testutil::random_form(rng, n, 2);
    for (int k = 0; k <= n; ++k) {
        const RecursionEq eq = derive_recursion(n, kappa, k);
        const RatFunc x = t() + c(2);
        RatFunc rhs_value;
        for (const auto& term : eq.rhs.terms()) rhs_value += term_on_form(term, F, x);
        const RatFunc lhs_value = RatFunc(eq.lhs_coeff) * F.partial_trace(k, x);
        RatFunc component_value;
        for (const auto& term : collect_degree(expand_shifted(n, kappa), k).terms()) {
            component_value += term_on_form(term, F, x);
        }
        CHECK(lhs_value - rhs_value == component_value);
    }
}

TEST_CASE("lift trace coefficient matches the concrete lift") {
    // B with vanishing unit slots: evaluating the lift at (x, y, 1, 1) must
    // reproduce the 2/3 coefficient the elimination derives symbolically.
    const SymForm B = SymForm::map_power(2, D);
    const SymForm B4 = b4_lift(B);
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 5; ++trial) {
        const RatFunc x = testutil::random_ratfunc(rng, 2);
        const RatFunc y = testutil::random_ratfunc(rng, 2);
        const std::vector<RatFunc> lifted_args = {x, y, c(1), c(1)};
        const std::vector<RatFunc> base_args = {x, y};
        CHECK(B4.evaluate(lifted_args) ==
              RatFunc(make_rational(2, 3)) * B.evaluate(base_args));
    }
}

TEST_CASE("derivative tensors satisfy the symmetrized constraint off the diagonal") {
    std::mt19937_64 rng(83);
    for (int n = 1; n <= 3; ++n) {
        const SymForm F = SymForm::map_power(n, D);
        std::vector<RatFunc> args;
        for (int i = 0; i <= n; ++i) args.push_back(testutil::random_ratfunc(rng, 2));
        CHECK(s_constraint_defect(F, args).is_zero());
    }
}

TEST_CASE("residual identities hold for the canonical derivation") {
    // Any identity produced for the kappa = 2 branch must be satisfied by
    // a = D, which generates a genuine solution family.
    for (int n = 1; n <= 6; ++n) {
        const IdentityCoeffs identity = residual_identity(n, solve_lambda(n));
        for (const RatFunc& x : default_samples()) {
            RatFunc value;
            for (const auto& [j, coeff] : identity.coeffs) {
                value += RatFunc(coeff) * x.pow(2 * n - j) * D.apply(x.pow(j));
            }
            CHECK(value.is_zero());
        }
    }
}

TEST_CASE("the reduced fourth-degree identity holds for the canonical derivation") {
    const IdentityCoeffs reduced = reduce_order_n3(residual_identity(3, solve_lambda(3)));
    for (const RatFunc& x : default_samples()) {
        RatFunc value;
        for (const auto& [j, coeff] : reduced.coeffs) {
            value += RatFunc(coeff) * x.pow(4 - j) * D.apply(x.pow(j));
        }
        CHECK(value.is_zero());
    }
}

TEST_CASE("polarization holds across many seeded trials on one form") {
    const SymForm family =
        lambda_family_form({Rational(9), make_rational(-9, 2), Rational(1)}, D);
    TrialPool pool(2024);
    CHECK(polarization_check(family, 50, pool).ok);
}

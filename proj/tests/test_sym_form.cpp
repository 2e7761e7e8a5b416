#include <doctest.h>

#include <algorithm>

#include "kappafeq/sym_form.hpp"
#include "test_util.hpp"

using namespace kappafeq;

namespace {
RatFunc t() { return RatFunc::variable(); }
RatFunc c(long v) { return RatFunc(Rational(v)); }
const AdditiveMap D = AdditiveMap::derivation(1);
const AdditiveMap Id = AdditiveMap::identity();
}  // namespace

TEST_CASE("evaluation of simple patterns") {
    SUBCASE("product of derivatives") {
        const SymForm F = SymForm::map_power(2, D);
        const std::vector<RatFunc> args = {t().pow(2), t().pow(3)};
        CHECK(F.evaluate(args) == c(6) * t().pow(3));
    }
    SUBCASE("single identity block") {
        const SymForm F = SymForm::single(3, Rational(5), BlockPattern::single_block(3, Id));
        const std::vector<RatFunc> args = {t(), t(), t()};
        CHECK(F.evaluate(args) == c(5) * t().pow(3));
    }
    SUBCASE("biadditive product form") {
        const SymForm F = SymForm::monomial_product(2);
        const RatFunc x = t() + c(1);
        const RatFunc y = t().pow(2) - c(3);
        const std::vector<RatFunc> args = {x, y};
        CHECK(F.evaluate(args) == x * y);
    }
    SUBCASE("arity mismatch is an error") {
        const SymForm F = SymForm::monomial_product(2);
        const std::vector<RatFunc> args = {t()};
        CHECK_THROWS_AS(F.evaluate(args), ArityMismatch);
    }
}

TEST_CASE("traces") {
    CHECK(SymForm::map_power(3, D).trace(t()).is_one());
    const SymForm cubic = SymForm::monomial_product(3) * Rational(7);
    CHECK(cubic.trace(t() + c(1)) == c(7) * (t() + c(1)).pow(3));

    // 9 x^2 a(x) - 9/2 x a(x^2) + a(x^3) with a = D collapses to 3x^2.
    const SymForm family =
        lambda_family_form({Rational(9), make_rational(-9, 2), Rational(1)}, D);
    CHECK(family.trace(t()) == c(3) * t().pow(2));
}

TEST_CASE("partial traces") {
    const SymForm F = SymForm::map_power(3, D);
    SUBCASE("k = 0 is constant in x") {
        CHECK(F.partial_trace(0, t()) == F.partial_trace(0, t().pow(2)));
    }
    SUBCASE("k = n recovers the trace") {
        CHECK(F.partial_trace(3, t() + c(2)) == F.trace(t() + c(2)));
    }
    SUBCASE("a single derivative block kills units") {
        CHECK(F.partial_trace(1, t()).is_zero());
    }
    CHECK_THROWS_AS(F.partial_trace(4, t()), ArityMismatch);
}

TEST_CASE("four-slot lift of a biadditive form") {
    SUBCASE("product form") {
        const SymForm B = SymForm::monomial_product(2);
        const SymForm B4 = b4_lift(B);
        const RatFunc x = t() + c(1);
        const RatFunc y = t().pow(2);
        const std::vector<RatFunc> args = {x, y, c(1), c(1)};
        CHECK(B4.evaluate(args) == x * y);
    }
    SUBCASE("derivative blocks") {
        const SymForm B = SymForm::map_power(2, D);
        const SymForm B4 = b4_lift(B);
        const std::vector<RatFunc> args = {t(), t(), t(), t()};
        CHECK(B4.evaluate(args) == c(4) * t().pow(2));
    }
    SUBCASE("trace identity against the base form") {
        std::mt19937_64 rng(17);
        for (int i = 0; i < 10; ++i) {
            const SymForm B = testutil::random_form(rng, 2);
            const SymForm B4 = b4_lift(B);
            const RatFunc x = testutil::random_ratfunc(rng, 2);
            const std::vector<RatFunc> diag = {x * x, x * x};
            CHECK(B4.trace(x) == B.evaluate(diag));
        }
    }
    CHECK_THROWS_AS(b4_lift(SymForm::monomial_product(3)), ArityMismatch);
}

TEST_CASE("symmetrized multiplicative constraint") {
    SUBCASE("derivative product passes on the diagonal") {
        const SymForm F = SymForm::map_power(3, D);
        const std::vector<RatFunc> args = {t(), t(), t(), t()};
        CHECK(s_constraint_defect(F, args).is_zero());
    }
    SUBCASE("plain product fails with the expected defect") {
        const SymForm F = SymForm::monomial_product(3);
        const std::vector<RatFunc> args = {t(), t(), t(), t()};
        CHECK(s_constraint_defect(F, args) == -(c(24) * t().pow(4)));
    }
    SUBCASE("two zero arguments annihilate") {
        std::mt19937_64 rng(23);
        const SymForm F = testutil::random_form(rng, 2);
        const std::vector<RatFunc> args = {RatFunc(), RatFunc(), t()};
        CHECK(s_constraint_defect(F, args).is_zero());
    }
    SUBCASE("diagonal reduces to the two-term difference") {
        std::mt19937_64 rng(29);
        for (int arity = 1; arity <= 3; ++arity) {
            const SymForm F = testutil::random_form(rng, arity);
            const RatFunc x = testutil::random_ratfunc(rng, 2);
            const std::vector<RatFunc> args(static_cast<std::size_t>(arity) + 1, x);
            std::vector<RatFunc> mixed(static_cast<std::size_t>(arity), x);
            mixed[0] = x * x;
            const RatFunc expected =
                RatFunc(Rational(factorial(arity + 1))) *
                (F.evaluate(mixed) - c(2) * x * F.trace(x));
            CHECK(s_constraint_defect(F, args) == expected);
        }
    }
}

TEST_CASE("forms are symmetric and multiadditive") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 15; ++i) {
        const int arity = 1 + static_cast<int>(rng() % 3);
        const SymForm F = testutil::random_form(rng, arity);
        std::vector<RatFunc> args;
        for (int s = 0; s < arity; ++s) args.push_back(testutil::random_ratfunc(rng, 2));
        const RatFunc base = F.evaluate(args);

        std::vector<RatFunc> shuffled = args;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(F.evaluate(shuffled) == base);

        const std::size_t slot = rng() % static_cast<std::size_t>(arity);
        const RatFunc u = testutil::random_ratfunc(rng, 2);
        std::vector<RatFunc> plus = args;
        plus[slot] = args[slot] + u;
        std::vector<RatFunc> other = args;
        other[slot] = u;
        CHECK(F.evaluate(plus) == base + F.evaluate(other));
    }
}

TEST_CASE("traces are homogeneous of the arity degree") {
    std::mt19937_64 rng(37);
    for (int arity = 1; arity <= 4; ++arity) {
        const SymForm F = testutil::random_form(rng, arity);
        const RatFunc x = testutil::random_ratfunc(rng, 2);
        const Rational scalar = testutil::random_rational(rng, true);
        CHECK(F.trace(RatFunc(scalar) * x) ==
              RatFunc(rational_pow(scalar, arity)) * F.trace(x));
    }
}

TEST_CASE("zero trace on samples goes with zero values") {
    // Forms built as a pattern minus a slot relabelling evaluate to zero
    // everywhere; their traces vanish on the samples and so do their values
    // on random tuples. Sample-based evidence, not a proof.
    std::mt19937_64 rng(41);
    for (int arity = 2; arity <= 3; ++arity) {
        SymForm F(arity);
        BlockPattern p = testutil::random_pattern(rng, arity);
        // Relabelling the slots of a pattern leaves the symmetrized value
        // unchanged, so the difference is the zero form.
        BlockPattern relabelled = p;
        for (auto& [slots, map] : relabelled.blocks) {
            for (int& s : slots) s = (s + 1) % arity;
        }
        F.add_term(Rational(1), p);
        F.add_term(Rational(-1), relabelled);

        bool trace_zero = true;
        for (const RatFunc& x : default_samples()) {
            if (!F.trace(x).is_zero()) trace_zero = false;
        }
        for (std::size_t i = 0; i + 1 < default_samples().size(); ++i) {
            if (!F.trace(default_samples()[i] + default_samples()[i + 1]).is_zero()) {
                trace_zero = false;
            }
        }
        if (trace_zero) {
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<RatFunc> args;
                for (int s = 0; s < arity; ++s) args.push_back(testutil::random_ratfunc(rng, 2));
                CHECK(F.evaluate(args).is_zero());
            }
        }
    }
}

TEST_CASE("form rendering round idioms") {
    const SymForm family =
        lambda_family_form({Rational(9), make_rational(-9, 2), Rational(1)}, D);
    CHECK(family.to_string() ==
          "9*D({1})*id({2})*id({3}) - 9/2*D({1,2})*id({3}) + 1*D({1,2,3})");
}

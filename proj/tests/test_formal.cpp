#include <doctest.h>

#include "kappafeq/formal.hpp"

using namespace kappafeq;

TEST_CASE("the shift expansion enumerates every slot composition") {
    const auto terms = expand_shifted_terms(3, Rational(2));
    int a_side = 0;
    for (const auto& term : terms) {
        if (term.outer_pow == 0 && term.coeff > 0) ++a_side;
    }
    // Compositions of 3 into three labelled parts: C(5,2) = 10.
    CHECK(a_side == 10);
}

TEST_CASE("extracted slot coefficients") {
    const Rational kappa(7);
    const auto terms = expand_shifted_terms(3, kappa);
    // The A-side term with one plain slot and two unit slots carries
    // binom(3;0,1,2) * 2 = 6.
    bool found = false;
    for (const auto& term : terms) {
        if (term.outer_pow == 0 && term.c2 == 0 && term.c1 == 1 && term.c0 == 2 &&
            term.coeff > 0) {
            CHECK(term.coeff == Rational(6));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("the unique degree-zero term is (1 - kappa) A([1]_n)") {
    for (int n = 1; n <= 5; ++n) {
        const Rational kappa = make_rational(5, 2);
        const FormalPoly P = expand_shifted(n, kappa);
        const FormalPoly deg0 = collect_degree(P, 0);
        CHECK(deg0.term_count() == 1);
        CHECK(deg0.coeff(0, 0, 0) == Rational(1) - kappa);
    }
}

TEST_CASE("first-degree component matches the displayed pair") {
    const Rational kappa(7);
    const FormalPoly deg1 = collect_degree(expand_shifted(3, kappa), 1);
    CHECK(deg1.coeff(0, 0, 1) == Rational(3) * (Rational(2) - kappa));
    CHECK(deg1.coeff(1, 0, 0) == -Rational(3) * kappa);
    CHECK(deg1.term_count() == 2);
}

TEST_CASE("degree components partition the expansion") {
    for (int n = 1; n <= 5; ++n) {
        for (long k : {1L, 2L, 3L}) {
            const FormalPoly P = expand_shifted(n, Rational(k));
            FormalPoly sum(n);
            for (int d = 0; d <= 2 * n; ++d) sum += collect_degree(P, d);
            CHECK(sum == P);
        }
    }
}

TEST_CASE("recursion equations isolate the plain diagonal") {
    SUBCASE("k = 0") {
        const RecursionEq eq = derive_recursion(4, Rational(3), 0);
        CHECK(eq.lhs_coeff == Rational(-2));
        CHECK(eq.rhs.is_zero());
    }
    SUBCASE("k = 1, n = 3") {
        const RecursionEq eq = derive_recursion(3, Rational(3), 1);
        CHECK(eq.lhs_coeff == Rational(3) * (Rational(2) - Rational(3)));
        CHECK(eq.rhs.term_count() == 1);
        CHECK(eq.rhs.coeff(1, 0, 0) == Rational(3) * Rational(3));
    }
    SUBCASE("k = n with kappa = 2^n gives no information") {
        const RecursionEq eq = derive_recursion(4, Rational(16), 4);
        CHECK(eq.lhs_coeff == 0);
    }
}

TEST_CASE("recursion soundness against the degree component") {
    for (int n = 2; n <= 5; ++n) {
        for (long kv : {2L, 3L, 7L}) {
            const Rational kappa(kv);
            for (int k = 0; k <= n; ++k) {
                const RecursionEq eq = derive_recursion(n, kappa, k);
                FormalPoly reconstructed(n);
                FormalTerm diagonal;
                diagonal.coeff = eq.lhs_coeff;
                diagonal.c1 = k;
                diagonal.c0 = n - k;
                reconstructed.add(diagonal);
                reconstructed -= eq.rhs;
                CHECK(reconstructed == collect_degree(expand_shifted(n, kappa), k));
            }
        }
    }
}

TEST_CASE("cubic degree components match the displayed identities") {
    const Rational kappa(7);
    SUBCASE("second degree: 3*(4-k)*A(x,x,1) + 3*A(x^2,1,1) - 9k*x*A(x,1,1) - 3k*x^2*A(1,1,1)") {
        const FormalPoly deg2 = collect_degree(expand_shifted(3, kappa), 2);
        CHECK(deg2.coeff(0, 1, 0) == Rational(3));
        CHECK(deg2.coeff(0, 0, 2) == Rational(3) * (Rational(4) - kappa));
        CHECK(deg2.coeff(1, 0, 1) == Rational(-9) * kappa);
        CHECK(deg2.coeff(2, 0, 0) == Rational(-3) * kappa);
        CHECK(deg2.term_count() == 4);
    }
    SUBCASE("third degree: (8-k)*A(x,x,x) + 12*A(x^2,x,1) - 9k*x*A(x,x,1) - 9k*x^2*A(x,1,1) - k*x^3*A(1,1,1)") {
        const FormalPoly deg3 = collect_degree(expand_shifted(3, kappa), 3);
        CHECK(deg3.coeff(0, 0, 3) == Rational(8) - kappa);
        CHECK(deg3.coeff(0, 1, 1) == Rational(12));
        CHECK(deg3.coeff(1, 0, 2) == Rational(-9) * kappa);
        CHECK(deg3.coeff(2, 0, 1) == Rational(-9) * kappa);
        CHECK(deg3.coeff(3, 0, 0) == -kappa);
        CHECK(deg3.term_count() == 5);
    }
}

TEST_CASE("term and polynomial rendering") {
    FormalTerm term;
    term.coeff = Rational(-6);
    term.outer_pow = 2;
    term.c2 = 1;
    term.c1 = 0;
    term.c0 = 2;
    CHECK(term.to_string() == "-6*x^2*A([x^2]_1,[1]_2)");
    const FormalPoly deg0 = collect_degree(expand_shifted(3, Rational(7)), 0);
    CHECK(deg0.to_string() == "-6*A([1]_3)");
}

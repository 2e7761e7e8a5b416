#include <doctest.h>

#include "kappafeq/classification.hpp"
#include "kappafeq/kappa4.hpp"
#include "test_util.hpp"

using namespace kappafeq;

namespace {
RatFunc t() { return RatFunc::variable(); }
RatFunc c(long v) { return RatFunc(Rational(v)); }
const AdditiveMap D = AdditiveMap::derivation(1);

std::vector<BigInt> ints(std::initializer_list<long> values) {
    std::vector<BigInt> out;
    for (long v : values) out.emplace_back(v);
    return out;
}
}  // namespace

TEST_CASE("multilinear extension of known diagonals") {
    SUBCASE("unit-power rule gives the plain product") {
        const ExtendedDiagonal ext =
            extend_multilinear(DiagonalRule::unit_power(2), 1, 1);
        CHECK(ext.degree == 3);
        CHECK(ext.unit_coeff == 1);
        CHECK(ext.a_coeffs.empty());
    }
    SUBCASE("first lambda row at a squared argument") {
        const ExtendedDiagonal ext =
            extend_multilinear(DiagonalRule::lambda({Rational(1)}), 1, 0);
        CHECK(ext.degree == 2);
        CHECK(ext.a_coeffs.at(2) == 1);
        CHECK(ext.a_coeffs.size() == 1);
    }
    SUBCASE("second lambda row at (x^2, x)") {
        const ExtendedDiagonal ext = extend_multilinear(
            DiagonalRule::lambda({Rational(3), make_rational(-1, 2)}), 1, 1);
        CHECK(ext.degree == 3);
        CHECK(ext.a_coeffs.at(1) == make_rational(3, 2));
        CHECK(ext.a_coeffs.at(2) == make_rational(3, 2));
        CHECK(ext.a_coeffs.at(3) == make_rational(-1, 2));
    }
    SUBCASE("multiset size must match the diagonal index") {
        CHECK_THROWS_AS(extend_multilinear(DiagonalRule::lambda({Rational(1)}), 1, 1),
                        ArityMismatch);
    }
}

TEST_CASE("lambda tables") {
    SUBCASE("n = 1 is the map itself") {
        const LambdaTable table = solve_lambda(1);
        REQUIRE(table.rows.size() == 1);
        CHECK(table.row(1) == std::vector<Rational>{Rational(1)});
    }
    SUBCASE("n = 3 reproduces the worked rows") {
        const LambdaTable table = solve_lambda(3);
        REQUIRE(table.rows.size() == 3);
        CHECK(table.row(1) == std::vector<Rational>{Rational(1)});
        CHECK(table.row(2) == std::vector<Rational>{Rational(3), make_rational(-1, 2)});
        CHECK(table.row(3) ==
              std::vector<Rational>{Rational(9), make_rational(-9, 2), Rational(1)});
    }
    SUBCASE("the trace of every row form solves the kappa = 2 equation") {
        for (int n = 1; n <= 5; ++n) {
            const LambdaTable table = solve_lambda(n);
            const SymForm family = lambda_family_form(table.row(n), D);
            CHECK(verify_solution(n, Rational(2), family).holds);
        }
    }
}

TEST_CASE("residual identities") {
    SUBCASE("n = 1 recovers the derivation identity") {
        const IdentityCoeffs identity = residual_identity(1, solve_lambda(1));
        CHECK(identity.degree == 2);
        CHECK(identity.coeffs.at(2) == 1);
        CHECK(identity.coeffs.at(1) == -2);
    }
    SUBCASE("n = 3 matches the integer-cleared vector") {
        const IdentityCoeffs identity = residual_identity(3, solve_lambda(3));
        CHECK(identity.cleared_vector() == ints({2, -9, -4, 36, -36}));
        const IdentityCoeffs cleared = identity.cleared();
        CHECK(cleared.coeffs.at(6) == 2);
        CHECK(cleared.coeffs.at(4) == -9);
        CHECK(cleared.coeffs.at(3) == -4);
        CHECK(cleared.coeffs.at(2) == 36);
        CHECK(cleared.coeffs.at(1) == -36);
        CHECK(cleared.coeffs.count(5) == 0);
    }
    SUBCASE("scaling the top row scales the identity") {
        LambdaTable table = solve_lambda(3);
        IdentityCoeffs base = residual_identity(3, table);
        for (auto& lam : table.rows[2]) lam *= Rational(5);
        IdentityCoeffs scaled = residual_identity(3, table);
        for (const auto& [j, coeff] : base.coeffs) {
            CHECK(scaled.coeffs.at(j) == coeff * Rational(5));
        }
    }
}

TEST_CASE("order reduction for n = 3") {
    const IdentityCoeffs input = residual_identity(3, solve_lambda(3));
    const ReduceOrderReport report = reduce_order_n3_report(input);

    SUBCASE("the translate difference contains the displayed mix") {
        CHECK(report.shifted_mix.at({0, 5}) == 4);
        CHECK(report.shifted_mix.at({1, 4}) == -6);
        CHECK(report.shifted_mix.at({0, 4}) == 7);
        CHECK(report.shifted_mix.at({2, 3}) == -16);
        CHECK(report.shifted_mix.at({1, 3}) == -28);
        CHECK(report.shifted_mix.at({3, 2}) == 44);
        CHECK(report.shifted_mix.at({2, 2}) == 42);
        CHECK(report.shifted_mix.at({4, 1}) == -36);
        CHECK(report.shifted_mix.at({3, 1}) == -28);
        CHECK(report.shifted_mix.size() == 9);
    }
    SUBCASE("fourth-degree component before normalization") {
        CHECK(report.fourth_degree.coeffs.at(4) == 7);
        CHECK(report.fourth_degree.coeffs.at(3) == -28);
        CHECK(report.fourth_degree.coeffs.at(2) == 42);
        CHECK(report.fourth_degree.coeffs.at(1) == -28);
        CHECK(report.fourth_degree.coeffs.size() == 4);
    }
    SUBCASE("normalized certificate") {
        const IdentityCoeffs reduced = reduce_order_n3(input);
        CHECK(reduced.coeffs.at(4) == 1);
        CHECK(reduced.coeffs.at(3) == -4);
        CHECK(reduced.coeffs.at(2) == 6);
        CHECK(reduced.coeffs.at(1) == -4);
    }
    SUBCASE("wrong shapes are rejected") {
        IdentityCoeffs bad;
        bad.degree = 4;
        bad.coeffs[2] = Rational(1);
        CHECK_THROWS_AS(reduce_order_n3(bad), InvalidInput);
        IdentityCoeffs balanced;  // coefficients summing to zero leave a(1) free
        balanced.degree = 6;
        balanced.coeffs[6] = Rational(1);
        balanced.coeffs[1] = Rational(-1);
        CHECK_THROWS_AS(reduce_order_n3(balanced), InvalidInput);
    }
}

TEST_CASE("kappa = 4 elimination") {
    const Kappa4Report report = kappa4_pipeline();

    CHECK(report.diagonal_rep == "A([x]_3) = 9*x*B(x,x) - 3*B(x^2,x)");

    SUBCASE("the degree-6 identity") {
        CHECK(report.g.coeff(0, 4, 2) == 1);
        CHECK(report.g.coeff(2, 2, 2) == -3);
        CHECK(report.g.coeff(3, 2, 1) == -4);
        CHECK(report.g.coeff(4, 1, 1) == 12);
        CHECK(report.g.terms().size() == 4);
    }
    SUBCASE("displayed coefficient vectors") {
        const std::vector<Rational> fourth = {Rational(3), Rational(-36), Rational(8),
                                              Rational(36)};
        const std::vector<Rational> fourth2 = {Rational(-1), Rational(9), Rational(-2),
                                               Rational(-9)};
        CHECK(report.eq_fourth_vec == fourth);
        CHECK(report.eq_fourth2_vec == fourth2);
    }
    SUBCASE("the elimination isolates B(x^2,x^2)") {
        CHECK(report.elimination[0] == 1);
        CHECK(report.elimination[1] == 4);
        CHECK(report.eliminated.terms().size() == 1);
        CHECK(report.eliminated.coeff(0, 2, 2) == -1);
    }
    SUBCASE("the lift trace forces B = 0") {
        CHECK(report.b4_unit_trace_coeff == make_rational(2, 3));
        CHECK(report.verdict == "IdenticallyZero");
    }
}

TEST_CASE("solution verification oracle") {
    SUBCASE("plain power for kappa = 1") {
        CHECK(verify_solution(3, Rational(1), SymForm::monomial_product(3) * Rational(5)).holds);
    }
    SUBCASE("derivative tensor for kappa = 2^n") {
        CHECK(verify_solution(3, Rational(8), SymForm::map_power(3, D)).holds);
    }
    SUBCASE("lambda family for kappa = 2") {
        const SymForm family =
            lambda_family_form({Rational(9), make_rational(-9, 2), Rational(1)}, D);
        CHECK(verify_solution(3, Rational(2), family).holds);
    }
    SUBCASE("mismatched kappa fails with the expected residual") {
        const VerifyResult result = verify_solution(3, Rational(4), SymForm::map_power(3, D));
        CHECK(!result.holds);
        CHECK(*result.witness == t());
        CHECK(*result.residual == c(4) * t().pow(3));
    }
    SUBCASE("derivative tensor is not a kappa = 1 solution") {
        CHECK(!verify_solution(3, Rational(1), SymForm::map_power(3, D)).holds);
    }
    SUBCASE("arity must match") {
        CHECK_THROWS_AS(verify_solution(2, Rational(1), SymForm::monomial_product(3)),
                        ArityMismatch);
    }
}

TEST_CASE("classification branches") {
    CHECK(classify(3, Rational(1)).branch == Branch::ScalarPower);
    CHECK(classify(3, Rational(4)).branch == Branch::IdenticallyZero);
    CHECK(classify(3, Rational(7)).branch == Branch::IdenticallyZero);
    CHECK(classify(2, Rational(7)).branch == Branch::IdenticallyZero);
    CHECK(classify(4, Rational(16)).branch == Branch::TopConstraint);
    CHECK(classify(2, Rational(4)).branch == Branch::TopConstraint);

    const Classification outside = classify(5, Rational(8));
    CHECK(outside.branch == Branch::OutsideTheorem);
    CHECK(*outside.obstruction_k == 3);
    // The induction log covers exactly the diagonals before the obstruction.
    CHECK(outside.derivation_log.size() == 4);

    const Classification family = classify(3, Rational(2));
    CHECK(family.branch == Branch::DerivationFamily);
    CHECK(*family.order_bound == 3);
    CHECK(family.lambda_table->row(3) ==
          std::vector<Rational>{Rational(9), make_rational(-9, 2), Rational(1)});
    CHECK(family.order3_certificate.has_value());

    const Classification one = classify(1, Rational(2));
    CHECK(one.branch == Branch::DerivationFamily);
    CHECK(*one.order_bound == 1);

    CHECK(*classify(2, Rational(2)).order_bound == 3);
    CHECK(*classify(4, Rational(2)).order_bound == 7);
    CHECK(*classify(5, Rational(2)).order_bound == 9);
}

TEST_CASE("classification is total and deterministic on the grid") {
    const std::vector<Rational> kappas = {
        Rational(1), Rational(2),  Rational(3), Rational(4), Rational(5),
        Rational(7), Rational(8),  Rational(16), Rational(32), make_rational(5, 2),
        Rational(0), Rational(-2), make_rational(1, 2)};
    for (int n = 1; n <= 8; ++n) {
        for (const auto& kappa : kappas) {
            const Classification first = classify(n, kappa);
            const Classification second = classify(n, kappa);
            CHECK(first.branch == second.branch);
            CHECK(first.derivation_log == second.derivation_log);
        }
    }
}

TEST_CASE("classification serializes with exact strings") {
    const auto doc = classification_to_json(classify(3, Rational(2)));
    CHECK(doc["branch"] == "DerivationFamily");
    CHECK(doc["order_bound"] == 3);
    CHECK(doc["lambda_table"][2] == nlohmann::ordered_json::array({"9", "-9/2", "1"}));
    CHECK(doc["residual_identity"]["6"] == "2");
    CHECK(doc["residual_identity"]["1"] == "-36");
    CHECK(doc["kappa"] == "2");

    const auto zero = classification_to_json(classify(2, make_rational(5, 2)));
    CHECK(zero["branch"] == "IdenticallyZero");
    CHECK(zero["kappa"] == "5/2");
}

#include <doctest.h>

#include <functional>

#include "kappafeq/additive_map.hpp"
#include "kappafeq/samples.hpp"
#include "test_util.hpp"

using namespace kappafeq;

namespace {
RatFunc t() { return RatFunc::variable(); }
RatFunc c(long v) { return RatFunc(Rational(v)); }
const AdditiveMap D = AdditiveMap::derivation(1);
const AdditiveMap D2 = AdditiveMap::derivation(2);
}  // namespace

TEST_CASE("apply differentiates exactly") {
    CHECK(D.apply(t().pow(3)) == c(3) * t().pow(2));
    CHECK(D2.apply(t().pow(3)) == c(6) * t());
    CHECK(D.apply(c(1) / t()) == -(c(1) / t().pow(2)));
    CHECK(AdditiveMap::identity().apply(t() + c(5)) == t() + c(5));
    CHECK(AdditiveMap().apply(t()).is_zero());
}

TEST_CASE("composition convolves orders") {
    CHECK(D.compose(D) == D2);
    CHECK(AdditiveMap::identity().compose(D2) == D2);
    CHECK((Rational(2) * D).compose(Rational(3) * D2) == Rational(6) * AdditiveMap::derivation(3));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const AdditiveMap a = testutil::random_map(rng);
        const AdditiveMap b = testutil::random_map(rng);
        const RatFunc p = testutil::random_ratfunc(rng, 2);
        CHECK(a.compose(b).apply(p) == a.apply(b.apply(p)));
    }
}

TEST_CASE("additivity and homogeneity on samples") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 25; ++i) {
        const AdditiveMap a = testutil::random_map(rng);
        const RatFunc p = testutil::random_ratfunc(rng, 2);
        const RatFunc q = testutil::random_ratfunc(rng, 2);
        const Rational scalar = testutil::random_rational(rng);
        CHECK(a.apply(p + q) == a.apply(p) + a.apply(q));
        CHECK(a.apply(RatFunc(scalar) * p) == RatFunc(scalar) * a.apply(p));
    }
}

TEST_CASE("derivatives kill the unit") {
    CHECK(D.apply(c(1)).is_zero());
    for (int k = 1; k <= 4; ++k) CHECK(AdditiveMap::derivation(k).apply(c(1)).is_zero());
    CHECK(AdditiveMap::identity().apply(c(1)).is_one());
}

TEST_CASE("leibniz defect probes the derivation property") {
    CHECK(leibniz_defect(D, t(), t()).is_zero());
    CHECK(leibniz_defect(D2, t(), t()) == c(2));
    const RatFunc x = t() + c(1);
    const RatFunc y = t().pow(2);
    CHECK(leibniz_defect(AdditiveMap::identity(), x, y) == -(x * y));
}

TEST_CASE("defect is symmetric") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        const AdditiveMap a = testutil::random_map(rng);
        const RatFunc x = testutil::random_ratfunc(rng, 2);
        const RatFunc y = testutil::random_ratfunc(rng, 2);
        CHECK(leibniz_defect(a, x, y) == leibniz_defect(a, y, x));
    }
}

TEST_CASE("order certification on the basis maps") {
    const auto& samples = default_samples();

    SUBCASE("D is a derivation") {
        const OrderCertificate cert = order_certify(D, 1, samples);
        CHECK(cert.certified);
    }
    SUBCASE("D^2 is not order 1; the first sample witnesses it") {
        const OrderCertificate cert = order_certify(D2, 1, samples);
        CHECK(!cert.certified);
        CHECK(*cert.witness == t());
        CHECK(*cert.residual == c(2));
    }
    SUBCASE("D^2 has order 2") {
        CHECK(order_certify(D2, 2, samples).certified);
    }
    SUBCASE("identity component fails the unit requirement") {
        const OrderCertificate cert = order_certify(AdditiveMap::identity(), 1, samples);
        CHECK(!cert.certified);
        CHECK(*cert.witness == c(1));
        CHECK(*cert.residual == c(1));
    }
}

TEST_CASE("certification is monotone in the order bound") {
    const auto& samples = default_samples();
    for (int k = 1; k <= 4; ++k) {
        const AdditiveMap dk = AdditiveMap::derivation(k);
        bool previous = false;
        for (int m = 1; m <= 4; ++m) {
            const bool now = order_certify(dk, m, samples).certified;
            if (previous) CHECK(now);
            previous = now;
        }
    }
}

namespace {

// Independent recursive probe of the order definition: order 0 is the zero
// map, order m means the two-variable defect has order m-1 in each slot.
using Fn = std::function<RatFunc(const RatFunc&)>;

bool order_at_most_recursive(const Fn& f, int m, std::span<const RatFunc> samples) {
    if (m == 0) {
        for (const RatFunc& x : samples) {
            if (!f(x).is_zero()) return false;
        }
        return true;
    }
    for (const RatFunc& x : samples) {
        const Fn defect = [&f, x](const RatFunc& y) {
            return f(x * y) - x * f(y) - y * f(x);
        };
        if (!order_at_most_recursive(defect, m - 1, samples)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("recursive defect probe agrees with the identity route") {
    // A reduced sample set keeps the exponential recursion affordable.
    std::vector<RatFunc> probe = {t(), t() + c(1), t().pow(2), c(1) / (t() + c(1)), c(2)};
    for (int k = 1; k <= 3; ++k) {
        const AdditiveMap dk = AdditiveMap::derivation(k);
        const Fn f = [&dk](const RatFunc& x) { return dk.apply(x); };
        for (int m = 1; m <= 3; ++m) {
            const bool via_identity = order_certify(dk, m, default_samples()).certified;
            const bool via_recursion = order_at_most_recursive(f, m, probe);
            CHECK(via_identity == (m >= k));
            CHECK(via_recursion == via_identity);
        }
    }
}

TEST_CASE("map rendering") {
    CHECK((D - make_rational(1, 2) * D2).to_string() == "D - 1/2*D^2");
    CHECK(AdditiveMap().to_string() == "0");
    CHECK(AdditiveMap::identity().to_string() == "id");
    CHECK((Rational(2) * AdditiveMap::identity() + AdditiveMap::derivation(3)).to_string() ==
          "2*id + D^3");
}

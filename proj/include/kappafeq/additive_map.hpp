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

#include <map>
#include <optional>
#include <span>
#include <string>

#include "kappafeq/rat_func.hpp"

namespace kappafeq {

/// Additive map on Q(t): a rational linear combination of iterated canonical
/// derivatives D^k (D = d/dt), with D^0 the identity map.
///
/// The representation stores order -> coefficient with all coefficients
/// nonzero; the zero map has empty support. Every map here is additive and
/// Q-homogeneous by construction.
class AdditiveMap {
public:
    AdditiveMap() = default;  // zero map

    static AdditiveMap identity();
    /// D^k (k >= 1; k = 0 yields the identity).
    static AdditiveMap derivation(int k = 1);
    static AdditiveMap from_terms(std::map<int, Rational> terms);

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RatFunc apply(const RatFunc& p) const;

    /// this after `inner`: apply(compose(a, b), p) = apply(a, apply(b, p)).
    AdditiveMap compose(const AdditiveMap& inner) const;

    AdditiveMap operator-() const;
    AdditiveMap& operator+=(const AdditiveMap& rhs);
    AdditiveMap& operator-=(const AdditiveMap& rhs);
    AdditiveMap& operator*=(const Rational& c);

    friend AdditiveMap operator+(AdditiveMap a, const AdditiveMap& b) { return a += b; }
    friend AdditiveMap operator-(AdditiveMap a, const AdditiveMap& b) { return a -= b; }
    friend AdditiveMap operator*(AdditiveMap a, const Rational& c) { return a *= c; }
    friend AdditiveMap operator*(const Rational& c, AdditiveMap a) { return a *= c; }

    std::string to_string() const;

    bool operator==(const AdditiveMap&) const = default;

private:
    std::map<int, Rational> terms_;
};

/// a(xy) - x*a(y) - y*a(x), the probe value B(x, y).
RatFunc leibniz_defect(const AdditiveMap& a, const RatFunc& x, const RatFunc& y);

struct OrderCertificate {
    bool certified = false;
    /// First failing sample and its nonzero residual, when not certified.
    std::optional<RatFunc> witness;
    std::optional<RatFunc> residual;
};

/// Checks that `a` behaves as a derivation of order at most `m` on every
/// sample: the alternating-binomial identity
///   sum_{j=0..m+1} (-1)^j C(m+1, j) x^j a(x^{m+1-j}) = 0
/// must hold exactly at each sample x, and additionally a(1) = 0. This is a
/// falsification check on the sample set, not a proof.
OrderCertificate order_certify(const AdditiveMap& a, int m, std::span<const RatFunc> samples);

}  // namespace kappafeq

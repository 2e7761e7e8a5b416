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

#include "kappafeq/additive_map.hpp"

#include <sstream>
#include <utility>

namespace kappafeq {

AdditiveMap AdditiveMap::identity() {
    AdditiveMap a;
    a.terms_[0] = Rational(1);
    return a;
}

AdditiveMap AdditiveMap::derivation(int k) {
    AdditiveMap a;
    a.terms_[k] = Rational(1);
    return a;
}

AdditiveMap AdditiveMap::from_terms(std::map<int, Rational> terms) {
    AdditiveMap a;
    for (auto& [k, c] : terms) {
        if (k < 0) throw InvalidInput("negative derivative order");
        if (c != 0) a.terms_.emplace(k, std::move(c));
    }
    return a;
}

RatFunc AdditiveMap::apply(const RatFunc& p) const {
    RatFunc result;
    RatFunc current = p;  // D^k(p), advanced incrementally
    int order = 0;
    for (const auto& [k, c] : terms_) {
        while (order < k) {
            current = current.derivative();
            ++order;
        }
        result += RatFunc(c) * current;
    }
    return result;
}

AdditiveMap AdditiveMap::compose(const AdditiveMap& inner) const {
    AdditiveMap out;
    for (const auto& [i, ci] : terms_) {
        for (const auto& [j, cj] : inner.terms_) {
            Rational& slot = out.terms_[i + j];
            slot += ci * cj;
            if (slot == 0) out.terms_.erase(i + j);
        }
    }
    return out;
}

AdditiveMap AdditiveMap::operator-() const {
    AdditiveMap r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

AdditiveMap& AdditiveMap::operator+=(const AdditiveMap& rhs) {
    for (const auto& [k, c] : rhs.terms_) {
        Rational& slot = terms_[k];
        slot += c;
        if (slot == 0) terms_.erase(k);
    }
    return *this;
}

AdditiveMap& AdditiveMap::operator-=(const AdditiveMap& rhs) {
    for (const auto& [k, c] : rhs.terms_) {
        Rational& slot = terms_[k];
        slot -= c;
        if (slot == 0) terms_.erase(k);
    }
    return *this;
}

AdditiveMap& AdditiveMap::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

std::string AdditiveMap::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (mag != 1) out << kappafeq::to_string(mag) << "*";
        if (k == 0) {
            out << "id";
        } else {
            out << "D";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

RatFunc leibniz_defect(const AdditiveMap& a, const RatFunc& x, const RatFunc& y) {
    return a.apply(x * y) - x * a.apply(y) - y * a.apply(x);
}

OrderCertificate order_certify(const AdditiveMap& a, int m, std::span<const RatFunc> samples) {
    if (m < 1) throw InvalidInput("order bound must be at least 1");
    if (samples.empty()) throw InvalidInput("empty sample set");
    OrderCertificate cert;

    const RatFunc one(Rational(1));
    RatFunc a_of_one = a.apply(one);
    if (!a_of_one.is_zero()) {
        cert.witness = one;
        cert.residual = std::move(a_of_one);
        return cert;
    }

    for (const RatFunc& x : samples) {
        RatFunc residual;
        for (int j = 0; j <= m + 1; ++j) {
            Rational c(binomial(m + 1, j));
            if (j % 2 == 1) c = -c;
            residual += RatFunc(c) * x.pow(j) * a.apply(x.pow(m + 1 - j));
        }
        if (!residual.is_zero()) {
            cert.witness = x;
            cert.residual = std::move(residual);
            return cert;
        }
    }
    cert.certified = true;
    return cert;
}

}  // namespace kappafeq

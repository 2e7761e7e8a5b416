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

#include "kappafeq/rat_func.hpp"

#include <sstream>
#include <utility>

namespace kappafeq {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

RatFunc RatFunc::variable() {
    return RatFunc(Poly::variable());
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    if (!den_.is_one()) {
        Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
    }
    const Rational lc = den_.leading_coeff();
    if (lc != 1) {
        num_ *= make_rational(denominator(lc), numerator(lc));
        den_ = den_.monic();
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

namespace {

// Exact division helper for factors known to divide.
Poly exact_div(const Poly& p, const Poly& d) {
    return d.is_one() ? p : p.divmod(d).first;
}

}  // namespace

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
    // With both sides canonical, only the shared denominator factor can
    // survive into the sum, so the final reduction stays small.
    const Poly d = gcd(den_, rhs.den_);
    if (d.is_one()) {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
        if (!num_.is_zero()) {
            const Rational lc = den_.leading_coeff();
            if (lc != 1) {
                num_ *= make_rational(denominator(lc), numerator(lc));
                den_ = den_.monic();
            }
        } else {
            den_ = Poly(Rational(1));
        }
        return *this;
    }
    const Poly den_red = exact_div(den_, d);
    const Poly rhs_red = exact_div(rhs.den_, d);
    Poly sum = num_ * rhs_red + rhs.num_ * den_red;
    if (sum.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rational(1));
        return *this;
    }
    const Poly g = gcd(sum, d);
    num_ = exact_div(sum, g);
    den_ = den_red * exact_div(rhs.den_, g);
    const Rational lc = den_.leading_coeff();
    if (lc != 1) {
        num_ *= make_rational(denominator(lc), numerator(lc));
        den_ = den_.monic();
    }
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) {
    return *this += -rhs;
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
    // Cross-reduce so the product is canonical without a large gcd.
    const Poly g1 = gcd(num_, rhs.den_);
    const Poly g2 = gcd(rhs.num_, den_);
    num_ = exact_div(num_, g1) * exact_div(rhs.num_, g2);
    den_ = exact_div(den_, g2) * exact_div(rhs.den_, g1);
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return *this;
    }
    const Rational lc = den_.leading_coeff();
    if (lc != 1) {
        num_ *= make_rational(denominator(lc), numerator(lc));
        den_ = den_.monic();
    }
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("division by the zero rational function");
    RatFunc inverse;
    inverse.num_ = rhs.den_;
    inverse.den_ = rhs.num_;
    const Rational lc = inverse.den_.leading_coeff();
    if (lc != 1) {
        inverse.num_ *= make_rational(denominator(lc), numerator(lc));
        inverse.den_ = inverse.den_.monic();
    }
    return *this *= inverse;
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw DivisionByZero("negative power of zero");
        RatFunc inv;
        inv.num_ = den_;
        inv.den_ = num_;
        inv.normalize();
        return inv.pow(-e);
    }
    RatFunc result(Rational(1));
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1L) result *= base;
        base *= base;
        e >>= 1L;
    }
    return result;
}

RatFunc RatFunc::derivative() const {
    // (n/d)' = (n'd - nd')/d^2; pulling out gcd(d, d') first keeps the
    // normalizing reduction small.
    if (den_.is_one()) return RatFunc(num_.derivative());
    const Poly dp = den_.derivative();
    const Poly g = gcd(den_, dp);
    const Poly e = exact_div(den_, g);
    const Poly h = exact_div(dp, g);
    Poly n = num_.derivative() * e - num_ * h;
    return RatFunc(std::move(n), den_ * e);
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::ostringstream out;
    const auto wrap = [](const Poly& p) {
        std::string s = p.to_string();
        bool multi = s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
        return multi ? "(" + s + ")" : s;
    };
    out << wrap(num_) << "/" << wrap(den_);
    return out.str();
}

RatFunc substitute(const RatFunc& f, const RatFunc& point) {
    RatFunc num(Rational(0));
    for (auto it = f.num().coeffs().rbegin(); it != f.num().coeffs().rend(); ++it) {
        num = num * point + RatFunc(*it);
    }
    RatFunc den(Rational(0));
    for (auto it = f.den().coeffs().rbegin(); it != f.den().coeffs().rend(); ++it) {
        den = den * point + RatFunc(*it);
    }
    return num / den;
}

}  // namespace kappafeq

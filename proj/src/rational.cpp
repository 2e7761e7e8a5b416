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

#include "kappafeq/rational.hpp"

namespace kappafeq {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    Rational q(num);
    q /= Rational(den);
    return q;
}

std::string to_string(const Rational& q) {
    return q.str();
}

Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const DivisionByZero&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidInput("not a rational literal: '" + text + "'");
    }
}

Rational rational_pow(const Rational& q, long exp) {
    if (exp < 0) {
        if (q == 0) {
            throw DivisionByZero("negative power of zero");
        }
        Rational inv = make_rational(denominator(q), numerator(q));
        return rational_pow(inv, -exp);
    }
    Rational result(1);
    Rational base = q;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e > 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1UL;
    }
    return result;
}

BigInt factorial(int n) {
    BigInt r(1);
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt r(1);
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

BigInt multinomial3(int n, int a, int b, int c) {
    return factorial(n) / (factorial(a) * factorial(b) * factorial(c));
}

Rational pow2(int k) {
    return Rational(BigInt(1) << k);
}

}  // namespace kappafeq

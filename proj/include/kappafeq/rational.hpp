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

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "kappafeq/errors.hpp"

namespace kappafeq {

// Exact scalars. Rational is always canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den with any signs; throws DivisionByZero when den = 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Renders "p" or "p/q" (q > 1), matching the wire format for scalars.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" with optional leading sign.
Rational rational_from_string(const std::string& text);

/// Integer power; q^0 = 1, negative exponents require q != 0.
Rational rational_pow(const Rational& q, long exp);

BigInt factorial(int n);
BigInt binomial(int n, int k);
/// n! / (a! b! c!) with a + b + c = n.
BigInt multinomial3(int n, int a, int b, int c);

/// 2^k as an exact rational (k >= 0).
Rational pow2(int k);

}  // namespace kappafeq

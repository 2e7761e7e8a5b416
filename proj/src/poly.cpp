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

#include "kappafeq/poly.hpp"

#include <algorithm>
#include <sstream>

namespace kappafeq {

namespace {
const Rational kZero(0);
}

Poly::Poly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::variable() {
    return monomial(Rational(1), 1);
}

Poly Poly::monomial(const Rational& c, int k) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
    Poly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

bool Poly::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

std::optional<int> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading_coeff() const {
    return coeffs_.back();
}

Poly Poly::monic() const {
    Poly r = *this;
    const Rational lc = leading_coeff();
    for (auto& c : r.coeffs_) c /= lc;
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly rem = *this;
    Poly quot;
    const int dd = *divisor.degree();
    while (!rem.is_zero() && *rem.degree() >= dd) {
        const int shift = *rem.degree() - dd;
        const Rational c = rem.leading_coeff() / divisor.leading_coeff();
        Poly term = Poly::monomial(c, shift);
        quot += term;
        rem -= term * divisor;
    }
    return {quot, rem};
}

Poly Poly::pow(int e) const {
    Poly result(Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return from_coeffs(std::move(out));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = *degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c == 0) continue;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit = (mag == 1);
        if (k == 0) {
            out << kappafeq::to_string(mag);
        } else {
            if (!unit) out << kappafeq::to_string(mag) << "*";
            out << "t";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

namespace {

// Integer image with content removed; keeps the Euclidean chain in Z[t]
// where coefficient growth is controlled by content stripping.
std::vector<BigInt> primitive_integer(const Poly& p) {
    BigInt den_lcm(1);
    for (const auto& c : p.coeffs()) {
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, denominator(c)) * denominator(c);
    }
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    BigInt content(0);
    for (const auto& c : p.coeffs()) {
        out.push_back(numerator(c) * (den_lcm / denominator(c)));
        content = boost::multiprecision::gcd(content, out.back());
    }
    for (auto& c : out) c /= content;
    return out;
}

void strip_content(std::vector<BigInt>& p) {
    BigInt content(0);
    for (const auto& c : p) content = boost::multiprecision::gcd(content, c);
    if (content == 0 || content == 1) return;
    for (auto& c : p) c /= content;
}

// lc(b)^(deg a - deg b + 1) * a mod b, kept in Z[t].
std::vector<BigInt> pseudo_remainder(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lead = b.back();
    while (a.size() > db) {
        const BigInt factor = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (factor != 0) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] *= lead;
            for (std::size_t i = 0; i < db; ++i) a[shift + i] -= factor * b[i];
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

Poly gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<BigInt> u = primitive_integer(a);
    std::vector<BigInt> v = primitive_integer(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        std::vector<BigInt> r = pseudo_remainder(std::move(u), v);
        strip_content(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(u.size());
    for (const auto& c : u) coeffs.emplace_back(c);
    return Poly::from_coeffs(std::move(coeffs)).monic();
}

Poly substitute(const Poly& p, const Poly& q) {
    Poly acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc *= q;
        acc += Poly(*it);
    }
    return acc;
}

}  // namespace kappafeq

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

#include "kappafeq/formal.hpp"

#include <sstream>

#include "kappafeq/errors.hpp"

namespace kappafeq {

namespace {

void append_coeff(std::ostream& out, const Rational& coeff, bool& first) {
    const bool negative = coeff < 0;
    Rational mag = negative ? Rational(-coeff) : coeff;
    if (first) {
        if (negative) out << "-";
        first = false;
    } else {
        out << (negative ? " - " : " + ");
    }
    out << to_string(mag) << "*";
}

std::string slot_body(int outer_pow, int c2, int c1, int c0) {
    std::ostringstream out;
    if (outer_pow > 0) {
        out << "x";
        if (outer_pow > 1) out << "^" << outer_pow;
        out << "*";
    }
    out << "A(";
    bool first = true;
    const auto group = [&](const char* sym, int count) {
        if (count == 0) return;
        if (!first) out << ",";
        first = false;
        out << "[" << sym << "]_" << count;
    };
    group("x^2", c2);
    group("x", c1);
    group("1", c0);
    out << ")";
    return out.str();
}

}  // namespace

std::string FormalTerm::to_string() const {
    std::ostringstream out;
    bool first = true;
    append_coeff(out, coeff, first);
    out << slot_body(outer_pow, c2, c1, c0);
    return out.str();
}

void FormalPoly::add(const FormalTerm& term) {
    if (term.c2 + term.c1 + term.c0 != n_) {
        throw InvalidInput("slot counts do not sum to the arity");
    }
    if (term.coeff == 0) return;
    const auto key = std::make_tuple(term.outer_pow, term.c2, term.c1);
    Rational& slot = terms_[key];
    slot += term.coeff;
    if (slot == 0) terms_.erase(key);
}

Rational FormalPoly::coeff(int outer_pow, int c2, int c1) const {
    auto it = terms_.find(std::make_tuple(outer_pow, c2, c1));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<FormalTerm> FormalPoly::terms() const {
    std::vector<FormalTerm> out;
    out.reserve(terms_.size());
    for (const auto& [key, coeff] : terms_) {
        const auto& [p, c2, c1] = key;
        out.push_back(FormalTerm{coeff, p, c2, c1, n_ - c2 - c1});
    }
    return out;
}

FormalPoly& FormalPoly::operator+=(const FormalPoly& rhs) {
    if (rhs.n_ != n_) throw InvalidInput("mixing expansions of different arity");
    for (const auto& term : rhs.terms()) add(term);
    return *this;
}

FormalPoly& FormalPoly::operator-=(const FormalPoly& rhs) {
    if (rhs.n_ != n_) throw InvalidInput("mixing expansions of different arity");
    for (auto term : rhs.terms()) {
        term.coeff = -term.coeff;
        add(term);
    }
    return *this;
}

FormalPoly& FormalPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= c;
    return *this;
}

std::string FormalPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        const auto& [p, c2, c1] = key;
        append_coeff(out, coeff, first);
        out << slot_body(p, c2, c1, n_ - c2 - c1);
    }
    return out.str();
}

std::vector<FormalTerm> expand_shifted_terms(int n, const Rational& kappa) {
    std::vector<FormalTerm> out;
    // A-side: compositions a1 + a2 + a3 = n of the slots (x^2, 2x, 1), the
    // doubling extracted as 2^{a2}.
    for (int a1 = 0; a1 <= n; ++a1) {
        for (int a2 = 0; a2 + a1 <= n; ++a2) {
            const int a3 = n - a1 - a2;
            FormalTerm term;
            term.coeff = Rational(multinomial3(n, a1, a2, a3)) * pow2(a2);
            term.outer_pow = 0;
            term.c2 = a1;
            term.c1 = a2;
            term.c0 = a3;
            out.push_back(std::move(term));
        }
    }
    // Product side: -kappa * (x+1)^n expanded against the partial diagonals.
    for (int b1 = 0; b1 <= n; ++b1) {
        for (int g1 = 0; g1 <= n; ++g1) {
            FormalTerm term;
            term.coeff = -kappa * Rational(binomial(n, b1) * binomial(n, g1));
            term.outer_pow = b1;
            term.c2 = 0;
            term.c1 = g1;
            term.c0 = n - g1;
            out.push_back(std::move(term));
        }
    }
    return out;
}

FormalPoly expand_shifted(int n, const Rational& kappa) {
    if (n < 1) throw InvalidInput("arity must be positive");
    FormalPoly P(n);
    for (const auto& term : expand_shifted_terms(n, kappa)) P.add(term);
    return P;
}

FormalPoly collect_degree(const FormalPoly& P, int k) {
    if (k < 0 || k > 2 * P.arity()) {
        throw InvalidInput("degree " + std::to_string(k) + " outside 0.." +
                           std::to_string(2 * P.arity()));
    }
    FormalPoly out(P.arity());
    for (const auto& term : P.terms()) {
        if (term.degree() == k) out.add(term);
    }
    return out;
}

RecursionEq derive_recursion(int n, const Rational& kappa, int k) {
    if (k < 0 || k > n) throw InvalidInput("recursion index outside 0..n");
    RecursionEq eq;
    eq.n = n;
    eq.k = k;
    eq.kappa = kappa;
    eq.lhs_coeff = Rational(binomial(n, k)) * (pow2(k) - kappa);
    eq.rhs = FormalPoly(n);

    FormalPoly component = collect_degree(expand_shifted(n, kappa), k);
    // The l = 0 and m = 0 members merge into the single plain-slot term.
    if (component.coeff(0, 0, k) != eq.lhs_coeff) {
        throw InvalidInput("degree component does not isolate the diagonal term");
    }
    for (auto term : component.terms()) {
        if (term.outer_pow == 0 && term.c2 == 0 && term.c1 == k) continue;
        term.coeff = -term.coeff;
        eq.rhs.add(term);
    }
    return eq;
}

std::string RecursionEq::to_string() const {
    std::ostringstream out;
    bool first = true;
    append_coeff(out, lhs_coeff, first);
    out << slot_body(0, 0, k, n - k) << " = " << rhs.to_string();
    return out.str();
}

}  // namespace kappafeq

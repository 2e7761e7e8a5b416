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

#include "kappafeq/engine.hpp"

#include <algorithm>
#include <sstream>

#include "kappafeq/samples.hpp"

namespace kappafeq {

namespace {

// Shared rendering for signed term sequences.
void append_signed(std::ostream& out, const Rational& coeff, const std::string& body,
                   bool& first) {
    const bool negative = coeff < 0;
    Rational mag = negative ? Rational(-coeff) : coeff;
    if (first) {
        if (negative) out << "-";
        first = false;
    } else {
        out << (negative ? " - " : " + ");
    }
    if (mag != 1 || body.empty()) {
        out << to_string(mag);
        if (!body.empty()) out << "*";
    }
    out << body;
}

std::string xpow_a_body(int xpow, int apow) {
    std::ostringstream out;
    if (xpow > 0) {
        out << "x";
        if (xpow > 1) out << "^" << xpow;
        out << "*";
    }
    out << "a(x";
    if (apow > 1) out << "^" << apow;
    out << ")";
    return out.str();
}

}  // namespace

const std::vector<Rational>& LambdaTable::row(int k) const {
    if (k < 1 || k > static_cast<int>(rows.size())) {
        throw InvalidInput("lambda row " + std::to_string(k) + " not available");
    }
    return rows[static_cast<std::size_t>(k - 1)];
}

std::string LambdaTable::to_string() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k) out << "; ";
        out << "k=" << k + 1 << ": (";
        for (std::size_t j = 0; j < rows[k].size(); ++j) {
            if (j) out << ", ";
            out << kappafeq::to_string(rows[k][j]);
        }
        out << ")";
    }
    return out.str();
}

IdentityCoeffs IdentityCoeffs::cleared() const {
    IdentityCoeffs out;
    out.degree = degree;
    if (coeffs.empty()) return out;
    BigInt num_gcd(0);
    BigInt den_lcm(1);
    for (const auto& [j, c] : coeffs) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, denominator(c)) * denominator(c);
    }
    if (num_gcd < 0) num_gcd = -num_gcd;
    Rational scale = make_rational(den_lcm, num_gcd);
    if (coeffs.begin()->second < 0) scale = -scale;
    for (const auto& [j, c] : coeffs) out.coeffs[j] = c * scale;
    return out;
}

IdentityCoeffs IdentityCoeffs::normalized() const {
    IdentityCoeffs out;
    out.degree = degree;
    if (coeffs.empty()) return out;
    const Rational lead = coeffs.begin()->second;
    for (const auto& [j, c] : coeffs) out.coeffs[j] = c / lead;
    return out;
}

std::vector<BigInt> IdentityCoeffs::cleared_vector() const {
    std::vector<BigInt> out;
    for (const auto& [j, c] : cleared().coeffs) out.push_back(numerator(c));
    return out;
}

std::string IdentityCoeffs::to_string() const {
    if (coeffs.empty()) return "0 = 0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [j, c] : coeffs) {
        append_signed(out, c, xpow_a_body(degree - j, j), first);
    }
    out << " = 0";
    return out.str();
}

DiagonalRule DiagonalRule::lambda(std::vector<Rational> row) {
    DiagonalRule r;
    r.kind = Kind::LambdaRow;
    r.index = static_cast<int>(row.size());
    r.lambda_row = std::move(row);
    return r;
}

ExtendedDiagonal extend_multilinear(const DiagonalRule& rule, int count_x2, int count_x) {
    if (count_x2 < 0 || count_x < 0 || count_x2 + count_x != rule.index) {
        throw ArityMismatch("argument multiset of size " +
                            std::to_string(count_x2 + count_x) +
                            " against a diagonal of " + std::to_string(rule.index) +
                            " slots (induction order violated)");
    }
    ExtendedDiagonal out;
    out.degree = 2 * count_x2 + count_x;
    switch (rule.kind) {
        case DiagonalRule::Kind::Zero:
            break;
        case DiagonalRule::Kind::UnitPower:
            // f(1) * x1 ... xl at the multiset is f(1) * x^degree.
            out.unit_coeff = Rational(1);
            break;
        case DiagonalRule::Kind::LambdaRow: {
            const int l = rule.index;
            // An a-block of size m picks i squares and m-i plain arguments;
            // the symmetrization average weights that split hypergeometrically.
            for (int m = 1; m <= l; ++m) {
                const Rational& lam = rule.lambda_row[static_cast<std::size_t>(m - 1)];
                if (lam == 0) continue;
                for (int i = std::max(0, m - count_x); i <= std::min(m, count_x2); ++i) {
                    Rational weight = make_rational(
                        binomial(count_x2, i) * binomial(count_x, m - i), binomial(l, m));
                    const int j = m + i;
                    out.a_coeffs[j] += lam * weight;
                    if (out.a_coeffs[j] == 0) out.a_coeffs.erase(j);
                }
            }
            break;
        }
    }
    return out;
}

LambdaTable solve_lambda(int n) {
    if (n < 1) throw InvalidInput("arity must be positive");
    LambdaTable table;
    table.rows.push_back({Rational(1)});
    const Rational kappa(2);
    for (int k = 2; k <= n; ++k) {
        RecursionEq eq = derive_recursion(n, kappa, k);
        std::map<int, Rational> total;  // j -> coefficient of x^{k-j} a(x^j)
        for (const auto& term : eq.rhs.terms()) {
            const int filled = term.c2 + term.c1;
            if (filled == 0) continue;  // x^p * A([1]_n): f(1) = 0 in this branch
            DiagonalRule rule = DiagonalRule::lambda(table.row(filled));
            ExtendedDiagonal ext = extend_multilinear(rule, term.c2, term.c1);
            for (const auto& [j, c] : ext.a_coeffs) {
                total[j] += term.coeff * c;
                if (total[j] == 0) total.erase(j);
            }
        }
        std::vector<Rational> row(static_cast<std::size_t>(k), Rational(0));
        for (const auto& [j, c] : total) {
            row[static_cast<std::size_t>(j - 1)] = c / eq.lhs_coeff;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

IdentityCoeffs residual_identity(int n, const LambdaTable& table) {
    const std::vector<Rational>& row = table.row(n);
    IdentityCoeffs out;
    out.degree = 2 * n;
    for (int j = 1; j <= n; ++j) {
        const Rational& lam = row[static_cast<std::size_t>(j - 1)];
        if (lam == 0) continue;
        out.coeffs[2 * j] += lam;
        out.coeffs[j] -= Rational(2) * lam;
    }
    std::erase_if(out.coeffs, [](const auto& e) { return e.second == 0; });
    return out;
}

ReduceOrderReport reduce_order_n3_report(const IdentityCoeffs& identity) {
    if (identity.degree != 6 || identity.coeffs.empty()) {
        throw InvalidInput("expected a degree-6 identity");
    }
    Rational at_unit(0);
    for (const auto& [j, c] : identity.coeffs) {
        if (j < 1 || j > 6) throw InvalidInput("a-power outside 1..6");
        at_unit += c;
    }
    // The identity at x = 1 reads (sum of coefficients) * a(1) = 0.
    if (at_unit == 0) {
        throw InvalidInput("identity does not force a(1) = 0");
    }

    std::map<std::pair<int, int>, Rational> mix;  // (p, i) -> coeff
    const auto put = [&mix](int p, int i, const Rational& c) {
        auto key = std::make_pair(p, i);
        mix[key] += c;
        if (mix[key] == 0) mix.erase(key);
    };
    for (const auto& [j, c] : identity.coeffs) {
        // c * (x+1)^{6-j} * a((x+1)^j), with a(1) = 0.
        for (int p = 0; p <= 6 - j; ++p) {
            const Rational outer(binomial(6 - j, p));
            for (int i = 1; i <= j; ++i) {
                put(p, i, c * outer * Rational(binomial(j, i)));
            }
        }
        put(6 - j, j, -c);
    }

    // Clear integer content; sign by the highest (degree, a-power) term.
    BigInt num_gcd(0);
    BigInt den_lcm(1);
    for (const auto& [key, c] : mix) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, denominator(c)) * denominator(c);
    }
    if (num_gcd < 0) num_gcd = -num_gcd;
    Rational scale = make_rational(den_lcm, num_gcd);
    auto lead = std::max_element(mix.begin(), mix.end(), [](const auto& a, const auto& b) {
        const auto grade = [](const std::pair<int, int>& k) {
            return std::make_pair(k.first + k.second, k.second);
        };
        return grade(a.first) < grade(b.first);
    });
    if (lead->second < 0) scale = -scale;
    for (auto& [key, c] : mix) c *= scale;

    ReduceOrderReport report;
    report.input = identity;
    report.shifted_mix = mix;

    std::ostringstream text;
    bool first = true;
    std::vector<std::pair<std::pair<int, int>, Rational>> ordered(mix.begin(), mix.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first > b.first.first;
    });
    for (const auto& [key, c] : ordered) {
        append_signed(text, c, xpow_a_body(key.first, key.second), first);
    }
    text << " = 0";
    report.shifted_mix_text = text.str();

    report.fourth_degree.degree = 4;
    for (const auto& [key, c] : mix) {
        if (key.first + key.second == 4) report.fourth_degree.coeffs[key.second] = c;
    }
    if (report.fourth_degree.coeffs.empty()) {
        throw InvalidInput("shift difference has no fourth-degree component");
    }
    report.normalized = report.fourth_degree.normalized();
    return report;
}

IdentityCoeffs reduce_order_n3(const IdentityCoeffs& identity) {
    return reduce_order_n3_report(identity).normalized;
}

VerifyResult verify_solution(int n, const Rational& kappa, const SymForm& F,
                             std::span<const RatFunc> samples) {
    if (F.arity() != n) {
        throw ArityMismatch("form arity " + std::to_string(F.arity()) +
                            " does not match n = " + std::to_string(n));
    }
    VerifyResult result;
    std::vector<RatFunc> points(samples.begin(), samples.end());
    const RatFunc t = RatFunc::variable();
    if (std::find(points.begin(), points.end(), t) == points.end()) points.push_back(t);
    for (const RatFunc& x : points) {
        RatFunc residual = F.trace(x * x) - RatFunc(kappa) * x.pow(n) * F.trace(x);
        if (!residual.is_zero()) {
            result.holds = false;
            result.witness = x;
            result.residual = std::move(residual);
            result.label = "fails on sample set";
            return result;
        }
    }
    return result;
}

VerifyResult verify_solution(int n, const Rational& kappa, const SymForm& F) {
    return verify_solution(n, kappa, F, default_samples());
}

}  // namespace kappafeq

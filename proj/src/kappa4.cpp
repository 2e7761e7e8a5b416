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

#include "kappafeq/kappa4.hpp"

#include <algorithm>
#include <sstream>

#include "kappafeq/errors.hpp"
#include "kappafeq/formal.hpp"

namespace kappafeq {

void BForm::add(int outer_pow, int u, int v, const Rational& coeff) {
    if (coeff == 0) return;
    if (u < v) std::swap(u, v);
    if (v == 0) return;  // B(z, 1) = A(z, 1, 1) = 0 in this branch
    const auto key = std::make_tuple(outer_pow, u, v);
    Rational& slot = terms_[key];
    slot += coeff;
    if (slot == 0) terms_.erase(key);
}

Rational BForm::coeff(int outer_pow, int u, int v) const {
    if (u < v) std::swap(u, v);
    auto it = terms_.find(std::make_tuple(outer_pow, u, v));
    return it == terms_.end() ? Rational(0) : it->second;
}

BForm& BForm::operator+=(const BForm& rhs) {
    for (const auto& [key, c] : rhs.terms_) {
        const auto& [p, u, v] = key;
        add(p, u, v, c);
    }
    return *this;
}

BForm& BForm::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= c;
    return *this;
}

BForm BForm::at_square() const {
    BForm out;
    for (const auto& [key, c] : terms_) {
        const auto& [p, u, v] = key;
        out.add(2 * p, 2 * u, 2 * v, c);
    }
    return out;
}

BForm BForm::shifted_out(int p) const {
    BForm out;
    for (const auto& [key, c] : terms_) {
        const auto& [q, u, v] = key;
        out.add(q + p, u, v, c);
    }
    return out;
}

BForm BForm::translate_collect(int d) const {
    BForm out;
    for (const auto& [key, c] : terms_) {
        const auto& [p, u, v] = key;
        for (int pp = 0; pp <= p; ++pp) {
            for (int i = 1; i <= u; ++i) {
                for (int j = 1; j <= v; ++j) {
                    if (pp + i + j != d) continue;
                    out.add(pp, i, j,
                            c * Rational(binomial(p, pp) * binomial(u, i) * binomial(v, j)));
                }
            }
        }
    }
    return out;
}

BForm BForm::cleared() const {
    if (terms_.empty()) return {};
    BigInt num_gcd(0);
    BigInt den_lcm(1);
    for (const auto& [key, c] : terms_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, denominator(c)) * denominator(c);
    }
    if (num_gcd < 0) num_gcd = -num_gcd;
    const Rational scale = make_rational(den_lcm, num_gcd);
    BForm out = *this;
    out *= scale;
    return out;
}

BForm BForm::cleared_positive_on(int outer_pow, int u, int v) const {
    BForm out = cleared();
    if (out.coeff(outer_pow, u, v) < 0) out *= Rational(-1);
    return out;
}

std::vector<Rational> BForm::on_basis(
    const std::vector<std::tuple<int, int, int>>& basis) const {
    std::vector<Rational> out;
    out.reserve(basis.size());
    std::size_t found = 0;
    for (const auto& [p, u, v] : basis) {
        const Rational c = coeff(p, u, v);
        if (c != 0) ++found;
        out.push_back(c);
    }
    if (found != terms_.size()) throw InvalidInput("term outside the requested basis");
    return out;
}

std::string b_monomial_to_string(int outer_pow, int u, int v) {
    std::ostringstream out;
    if (outer_pow > 0) {
        out << "x";
        if (outer_pow > 1) out << "^" << outer_pow;
        out << "*";
    }
    const auto pow_str = [](int e) {
        std::string s = "x";
        if (e > 1) s += "^" + std::to_string(e);
        return s;
    };
    out << "B(" << pow_str(u) << "," << pow_str(v) << ")";
    return out.str();
}

std::string BForm::to_string() const {
    if (terms_.empty()) return "0";
    // Display order: higher outer powers first, then smaller B-arguments.
    std::vector<std::pair<std::tuple<int, int, int>, Rational>> ordered(terms_.begin(),
                                                                        terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const auto& [pa, ua, va] = a.first;
        const auto& [pb, ub, vb] = b.first;
        return std::make_tuple(-pa, ua, va) < std::make_tuple(-pb, ub, vb);
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : ordered) {
        const auto& [p, u, v] = key;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (mag != 1) out << kappafeq::to_string(mag) << "*";
        out << b_monomial_to_string(p, u, v);
    }
    return out.str();
}

const std::vector<std::tuple<int, int, int>>& kappa4_fourth_basis() {
    static const std::vector<std::tuple<int, int, int>> basis = {
        {0, 2, 2}, {1, 2, 1}, {0, 3, 1}, {2, 1, 1}};
    return basis;
}

namespace {

// A three-argument value A(x^i, x^j, x^k) rewritten through B via the
// trilinear inversion
//   A(x,y,z) = 3[xB(y,z) + yB(x,z) + zB(x,y)] - [B(xy,z) + B(xz,y) + B(yz,x)],
// valid once A(z,1,1) = 0 for all z.
BForm a3_in_b(int outer_pow, int i, int j, int k) {
    BForm out;
    const Rational three(3);
    out.add(outer_pow + i, j, k, three);
    out.add(outer_pow + j, i, k, three);
    out.add(outer_pow + k, i, j, three);
    out.add(outer_pow, i + j, k, Rational(-1));
    out.add(outer_pow, i + k, j, Rational(-1));
    out.add(outer_pow, j + k, i, Rational(-1));
    return out;
}

}  // namespace

Kappa4Report kappa4_pipeline() {
    const int n = 3;
    const Rational kappa(4);
    Kappa4Report report;

    // Degrees 0 and 1 of the shifted expansion force f(1) = 0 and then
    // A(x,1,1) = 0, which is what licenses the B-only calculus below.
    RecursionEq eq0 = derive_recursion(n, kappa, 0);
    RecursionEq eq1 = derive_recursion(n, kappa, 1);
    report.log.push_back("deg 0: " + eq0.to_string() + "  =>  A([1]_3) = 0");
    report.log.push_back("deg 1: " + eq1.to_string() + "  =>  A([x]_1,[1]_2) = 0");

    // Degree 3 determines the diagonal through B(x,y) = A(x,y,1).
    FormalPoly deg3 = collect_degree(expand_shifted(n, kappa), 3);
    report.log.push_back("deg 3: " + deg3.to_string() + " = 0");
    Rational diag_coeff;
    BForm diagonal;
    for (const auto& term : deg3.terms()) {
        const int filled = term.c2 + term.c1;
        if (filled <= 1) continue;  // vanishes: A([1]_3) = A([x]_1,[1]_2) = 0
        if (term.outer_pow == 0 && term.c2 == 0 && term.c1 == 3) {
            diag_coeff = term.coeff;
            continue;
        }
        // Remaining terms have exactly one unit slot: they are B-values.
        if (term.c0 != 1 || filled != 2) {
            throw InvalidInput("unexpected cubic term shape: " + term.to_string());
        }
        std::vector<int> powers;
        for (int s = 0; s < term.c2; ++s) powers.push_back(2);
        for (int s = 0; s < term.c1; ++s) powers.push_back(1);
        diagonal.add(term.outer_pow, powers[0], powers[1], -term.coeff);
    }
    if (diag_coeff == 0) throw InvalidInput("diagonal term missing from the cubic component");
    diagonal *= make_rational(denominator(diag_coeff), numerator(diag_coeff));
    report.diagonal_rep = "A([x]_3) = " + diagonal.to_string();
    report.log.push_back(report.diagonal_rep);

    // g(x) = f(x^2) - 4 x^3 f(x) written in B, normalized on B(x^4,x^2).
    BForm g_raw = diagonal.at_square();
    g_raw += diagonal.shifted_out(3) * (-kappa);
    report.g = g_raw.cleared_positive_on(0, 4, 2);
    report.log.push_back("g(x) = " + report.g.to_string() + " = 0");

    // Fourth-degree terms of g translated by 1.
    report.eq_fourth = report.g.translate_collect(4).cleared();
    report.eq_fourth_vec = report.eq_fourth.on_basis(kappa4_fourth_basis());
    report.log.push_back("fourth degree of the translate: " + report.eq_fourth.to_string() +
                         " = 0");

    // Fourth-degree combination of the expansion, rewritten through B:
    //   A(x^2,x,x) - 3x^2 A(x,x,1) - x A(x,x,x) = 0.
    BForm fourth2 = a3_in_b(0, 2, 1, 1);
    fourth2 += a3_in_b(2, 1, 1, 0) * Rational(-3);
    fourth2 += a3_in_b(1, 1, 1, 1) * Rational(-1);
    report.eq_fourth2 = fourth2.cleared();
    report.eq_fourth2_vec = report.eq_fourth2.on_basis(kappa4_fourth_basis());
    report.log.push_back(
        "fourth-degree combination A([x^2]_1,[x]_2) - 3*x^2*A([x]_2,[1]_1) - x*A([x]_3): " +
        report.eq_fourth2.to_string() + " = 0");

    // Exact elimination: c1 * eq_fourth + c2 * eq_fourth2 with every
    // coordinate except B(x^2,x^2) cancelled, normalized to c1 = 1.
    const auto& basis = kappa4_fourth_basis();
    const auto& v1 = report.eq_fourth_vec;
    const auto& v2 = report.eq_fourth2_vec;
    Rational c1(1);
    Rational c2(0);
    bool pinned = false;
    for (std::size_t i = 1; i < basis.size(); ++i) {
        if (v2[i] == 0) {
            if (v1[i] != 0) throw InvalidInput("elimination impossible");
            continue;
        }
        const Rational ratio = -v1[i] / v2[i];
        if (!pinned) {
            c2 = ratio;
            pinned = true;
        } else if (c2 != ratio) {
            throw InvalidInput("elimination inconsistent across coordinates");
        }
    }
    report.elimination = {c1, c2};
    report.eliminated = report.eq_fourth + report.eq_fourth2 * c2;
    if (report.eliminated.is_zero() || report.eliminated.coeff(0, 2, 2) == 0 ||
        report.eliminated.terms().size() != 1) {
        throw InvalidInput("combination does not isolate B(x^2,x^2)");
    }
    report.log.push_back("eq_fourth + " + to_string(c2) + "*eq_fourth2 = " +
                         report.eliminated.to_string() + "  =>  B(x^2,x^2) = 0");

    // B(x^2,x^2) is the trace of the 4-additive lift
    //   B4(x1..x4) = (1/3)[B(x1x2,x3x4) + B(x1x3,x2x4) + B(x1x4,x2x3)],
    // so B4 vanishes; its value at (x,y,1,1) is a multiple of B(x,y).
    static const int kPairings[3][2][2] = {
        {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    // Slot powers of (x, y, 1, 1) encoded as (x-count, y-count) exponents.
    const std::array<std::pair<int, int>, 4> slot = {{{1, 0}, {0, 1}, {0, 0}, {0, 0}}};
    Rational coeff_bxy(0);
    for (const auto& pairing : kPairings) {
        std::pair<int, int> lhs{slot[static_cast<std::size_t>(pairing[0][0])].first +
                                    slot[static_cast<std::size_t>(pairing[0][1])].first,
                                slot[static_cast<std::size_t>(pairing[0][0])].second +
                                    slot[static_cast<std::size_t>(pairing[0][1])].second};
        std::pair<int, int> rhs{slot[static_cast<std::size_t>(pairing[1][0])].first +
                                    slot[static_cast<std::size_t>(pairing[1][1])].first,
                                slot[static_cast<std::size_t>(pairing[1][0])].second +
                                    slot[static_cast<std::size_t>(pairing[1][1])].second};
        if (lhs > rhs) std::swap(lhs, rhs);
        const bool unit_slot = (lhs == std::make_pair(0, 0)) || (rhs == std::make_pair(0, 0));
        if (unit_slot) continue;  // B(xy, 1) = 0
        if (lhs == std::make_pair(0, 1) && rhs == std::make_pair(1, 0)) {
            coeff_bxy += make_rational(1, 3);
        } else {
            throw InvalidInput("unexpected product in the lift trace");
        }
    }
    report.b4_unit_trace_coeff = coeff_bxy;
    report.log.push_back("B4(x,y,1,1) = " + to_string(coeff_bxy) +
                         "*B(x,y); trace of B4 vanishes  =>  B = 0  =>  f = 0");
    report.verdict = "IdenticallyZero";
    return report;
}

}  // namespace kappafeq

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

#include "kappafeq/classification.hpp"

#include <sstream>

#include "kappafeq/kappa4.hpp"

namespace kappafeq {

namespace {

/// k with kappa = 2^k, if kappa is a nonnegative power of two.
std::optional<int> power_of_two_index(const Rational& kappa) {
    if (denominator(kappa) != 1) return std::nullopt;
    BigInt n = numerator(kappa);
    if (n <= 0) return std::nullopt;
    int k = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++k;
    }
    if (n != 1) return std::nullopt;
    return k;
}

std::string diagonal_symbol(int n, int k) {
    std::ostringstream out;
    out << "A(";
    if (k > 0) out << "[x]_" << k;
    if (k > 0 && k < n) out << ",";
    if (k < n) out << "[1]_" << n - k;
    out << ")";
    return out.str();
}

/// The vanishing induction k = 0..limit: every recursion step has a nonzero
/// left coefficient and a right side known to vanish, so each diagonal is 0.
void log_zero_induction(Classification& c, int limit) {
    for (int k = 0; k <= limit; ++k) {
        RecursionEq eq = derive_recursion(c.n, c.kappa, k);
        std::ostringstream line;
        line << "deg " << k << ": " << eq.to_string();
        if (k > 0) line << "  (right side vanishes by induction)";
        line << "  =>  " << diagonal_symbol(c.n, k) << " = 0";
        c.derivation_log.push_back(line.str());
    }
}

void classify_scalar_power(Classification& c) {
    c.branch = Branch::ScalarPower;
    const int n = c.n;
    c.derivation_log.push_back("deg 0: A([1]_" + std::to_string(n) + ") = f(1)");
    for (int k = 1; k <= n; ++k) {
        RecursionEq eq = derive_recursion(n, c.kappa, k);
        // Each right-hand term is the unit-power extension of a lower
        // diagonal, so it contributes coeff * f(1) * x^k.
        Rational total(0);
        for (const auto& term : eq.rhs.terms()) {
            ExtendedDiagonal ext = extend_multilinear(
                DiagonalRule::unit_power(term.c2 + term.c1), term.c2, term.c1);
            total += term.coeff * ext.unit_coeff;
        }
        if (total != eq.lhs_coeff) {
            throw InvalidInput("unit-power induction failed at k = " + std::to_string(k));
        }
        std::ostringstream line;
        line << "deg " << k << ": " << eq.to_string() << "  =>  " << diagonal_symbol(n, k)
             << " = f(1)*x";
        if (k > 1) line << "^" << k;
        c.derivation_log.push_back(line.str());
    }
    c.derivation_log.push_back("f(x) = f(1)*x^" + std::to_string(n));
}

void classify_derivation_family(Classification& c) {
    c.branch = Branch::DerivationFamily;
    const int n = c.n;
    LambdaTable table = solve_lambda(n);
    for (int k = 1; k <= n; ++k) {
        std::ostringstream line;
        line << diagonal_symbol(n, k) << " = ";
        bool first = true;
        const auto& row = table.row(k);
        for (int j = 1; j <= k; ++j) {
            const Rational& lam = row[static_cast<std::size_t>(j - 1)];
            if (lam == 0) continue;
            if (!first) line << " + ";
            first = false;
            line << "(" << to_string(lam) << ")";
            if (k - j > 0) {
                line << "*x";
                if (k - j > 1) line << "^" << k - j;
            }
            line << "*a(x";
            if (j > 1) line << "^" << j;
            line << ")";
        }
        c.derivation_log.push_back(line.str());
    }
    IdentityCoeffs residual = residual_identity(n, table);
    c.derivation_log.push_back("residual identity: " + residual.cleared().to_string());
    if (n == 3) {
        ReduceOrderReport reduction = reduce_order_n3_report(residual);
        c.derivation_log.push_back("translate difference: " + reduction.shifted_mix_text);
        c.derivation_log.push_back("fourth-degree part: " +
                                   reduction.fourth_degree.to_string());
        c.derivation_log.push_back("normalized: " + reduction.normalized.to_string() +
                                   "  =>  a has order at most 3");
        c.order3_certificate = reduction.normalized;
        c.order_bound = 3;
    } else {
        c.order_bound = 2 * n - 1;
    }
    c.derivation_log.push_back("order bound for a: " + std::to_string(*c.order_bound));
    c.lambda_table = std::move(table);
    c.residual = std::move(residual);
}

void classify_top_constraint(Classification& c) {
    c.branch = Branch::TopConstraint;
    const int n = c.n;
    log_zero_induction(c, n - 1);
    c.derivation_log.push_back("deg " + std::to_string(n) + ": " +
                               derive_recursion(n, c.kappa, n).to_string() +
                               "  (no information: left coefficient is 0)");

    // Degree n+1 of the expansion, with every diagonal of fewer than n filled
    // slots already zero.
    FormalPoly top = collect_degree(expand_shifted(n, c.kappa), n + 1);
    FormalPoly surviving(n);
    for (const auto& term : top.terms()) {
        if (term.c2 + term.c1 <= n - 1) continue;
        surviving.add(term);
    }
    const Rational lead = surviving.coeff(0, 1, n - 1);
    const Rational drag = surviving.coeff(1, 0, n);
    if (lead != Rational(n) * pow2(n - 1) || drag != -c.kappa * Rational(n) ||
        surviving.term_count() != 2) {
        throw InvalidInput("unexpected degree-(n+1) survivors");
    }
    c.derivation_log.push_back("deg " + std::to_string(n + 1) + ": " + surviving.to_string() +
                               " = 0");
    std::ostringstream diag;
    diag << "A([x^2]_1,[x]_" << n - 1 << ") - 2*x*A([x]_" << n << ") = 0";
    c.derivation_log.push_back(diag.str());

    std::ostringstream constraint;
    constraint << "sum over sigma in S_" << n + 1 << " of [ A(x_s(1)*x_s(2), x_s(3), ..., x_s("
               << n + 1 << ")) - x_s(1)*A(x_s(2), ..., x_s(" << n + 1
               << ")) - x_s(2)*A(x_s(1), x_s(3), ..., x_s(" << n + 1 << ")) ] = 0";
    c.constraint = constraint.str();
    c.derivation_log.push_back("trace vanishing lifts to the symmetrized constraint: " +
                               *c.constraint);
}

}  // namespace

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::IdenticallyZero: return "IdenticallyZero";
        case Branch::ScalarPower: return "ScalarPower";
        case Branch::DerivationFamily: return "DerivationFamily";
        case Branch::TopConstraint: return "TopConstraint";
        case Branch::OutsideTheorem: return "OutsideTheorem";
    }
    return "?";
}

Classification classify(int n, const Rational& kappa) {
    if (n < 1) throw InvalidInput("degree must be a positive integer");
    Classification c;
    c.n = n;
    c.kappa = kappa;

    if (kappa == 1) {
        classify_scalar_power(c);
        return c;
    }
    if (kappa == 2) {
        classify_derivation_family(c);
        return c;
    }
    const std::optional<int> k = power_of_two_index(kappa);
    if (k && *k == n && n >= 2) {
        classify_top_constraint(c);
        return c;
    }
    if (k && n == 3 && *k == 2) {
        c.branch = Branch::IdenticallyZero;
        Kappa4Report report = kappa4_pipeline();
        c.derivation_log = report.log;
        return c;
    }
    if (k && *k >= 2 && *k <= n - 1) {
        c.branch = Branch::OutsideTheorem;
        c.obstruction_k = *k;
        log_zero_induction(c, *k - 1);
        std::ostringstream line;
        line << "deg " << *k << ": " << derive_recursion(n, kappa, *k).to_string()
             << "  (left coefficient vanishes: induction obstructed at k = " << *k << ")";
        c.derivation_log.push_back(line.str());
        return c;
    }
    c.branch = Branch::IdenticallyZero;
    log_zero_induction(c, n);
    c.derivation_log.push_back("f(x) = A([x]_" + std::to_string(n) + ") = 0");
    return c;
}

nlohmann::ordered_json classification_to_json(const Classification& c) {
    nlohmann::ordered_json out;
    out["branch"] = branch_name(c.branch);
    out["n"] = c.n;
    out["kappa"] = to_string(c.kappa);
    if (c.order_bound) out["order_bound"] = *c.order_bound;
    if (c.lambda_table) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : c.lambda_table->rows) {
            nlohmann::ordered_json r = nlohmann::ordered_json::array();
            for (const auto& lam : row) r.push_back(to_string(lam));
            rows.push_back(std::move(r));
        }
        out["lambda_table"] = std::move(rows);
    }
    if (c.residual) {
        nlohmann::ordered_json res;
        for (const auto& [j, coeff] : c.residual->cleared().coeffs) {
            res[std::to_string(j)] = to_string(coeff);
        }
        out["residual_identity"] = std::move(res);
    }
    if (c.order3_certificate) {
        nlohmann::ordered_json cert;
        for (const auto& [j, coeff] : c.order3_certificate->coeffs) {
            cert[std::to_string(j)] = to_string(coeff);
        }
        out["order3_certificate"] = std::move(cert);
    }
    if (c.constraint) out["constraint"] = *c.constraint;
    if (c.obstruction_k) out["obstruction_k"] = *c.obstruction_k;
    out["derivation_log"] = c.derivation_log;
    return out;
}

std::string classification_to_text(const Classification& c) {
    std::ostringstream out;
    out << "n = " << c.n << ", kappa = " << to_string(c.kappa) << ": " << branch_name(c.branch)
        << "\n";
    switch (c.branch) {
        case Branch::ScalarPower:
            out << "  f(x) = f(1)*x^" << c.n << "\n";
            break;
        case Branch::DerivationFamily:
            out << "  f(x) = sum_j lambda_j * x^(n-j) * a(x^j), order of a at most "
                << *c.order_bound << "\n";
            out << "  lambda table: " << c.lambda_table->to_string() << "\n";
            out << "  residual: " << c.residual->cleared().to_string() << "\n";
            break;
        case Branch::TopConstraint:
            out << "  f is the trace of a form obeying:\n  " << *c.constraint << "\n";
            break;
        case Branch::OutsideTheorem:
            out << "  no verdict: induction obstructed at k = " << *c.obstruction_k << "\n";
            break;
        case Branch::IdenticallyZero:
            out << "  f(x) = 0\n";
            break;
    }
    for (const auto& line : c.derivation_log) out << "  | " << line << "\n";
    return out.str();
}

}  // namespace kappafeq

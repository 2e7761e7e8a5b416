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

#include "kappafeq/sym_form.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kappafeq {

BlockPattern BlockPattern::product_of(const std::vector<AdditiveMap>& maps) {
    BlockPattern p;
    p.arity = static_cast<int>(maps.size());
    for (int i = 0; i < p.arity; ++i) {
        p.blocks.emplace_back(std::vector<int>{i}, maps[static_cast<std::size_t>(i)]);
    }
    return p;
}

BlockPattern BlockPattern::single_block(int arity, const AdditiveMap& map) {
    BlockPattern p;
    p.arity = arity;
    std::vector<int> slots(static_cast<std::size_t>(arity));
    std::iota(slots.begin(), slots.end(), 0);
    p.blocks.emplace_back(std::move(slots), map);
    return p;
}

void BlockPattern::canonicalize() {
    std::vector<bool> seen(static_cast<std::size_t>(arity), false);
    int covered = 0;
    for (auto& [slots, map] : blocks) {
        if (slots.empty()) throw InvalidInput("empty block in pattern");
        std::sort(slots.begin(), slots.end());
        for (int s : slots) {
            if (s < 0 || s >= arity) {
                throw InvalidInput("slot index " + std::to_string(s + 1) + " outside 1.." +
                                   std::to_string(arity));
            }
            if (seen[static_cast<std::size_t>(s)]) {
                throw InvalidInput("slot index " + std::to_string(s + 1) + " used twice");
            }
            seen[static_cast<std::size_t>(s)] = true;
            ++covered;
        }
    }
    if (covered != arity) throw InvalidInput("blocks do not cover every slot");
    // The symmetrized value depends only on the block sizes and maps, so slot
    // labels are normalized away: blocks ordered by size (largest first) and
    // map, then numbered consecutively.
    std::stable_sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
        return a.second.to_string() < b.second.to_string();
    });
    int next = 0;
    for (auto& [slots, map] : blocks) {
        for (int& s : slots) s = next++;
    }
}

std::string BlockPattern::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [slots, map] : blocks) {
        if (!first) out << "*";
        first = false;
        const std::string m = map.to_string();
        const bool atom = (map.terms().size() == 1 && map.terms().begin()->second == 1);
        out << (atom ? m : "(" + m + ")");
        out << "({";
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (i) out << ",";
            out << slots[i] + 1;
        }
        out << "})";
    }
    return out.str();
}

SymForm::SymForm(int arity) : arity_(arity) {
    if (arity < 1) throw InvalidInput("form arity must be positive");
}

SymForm SymForm::monomial_product(int n) {
    return map_power(n, AdditiveMap::identity());
}

SymForm SymForm::map_power(int n, const AdditiveMap& a) {
    SymForm f(n);
    f.add_term(Rational(1), BlockPattern::product_of(std::vector<AdditiveMap>(
                                static_cast<std::size_t>(n), a)));
    return f;
}

SymForm SymForm::single(int arity, const Rational& coeff, BlockPattern pattern) {
    SymForm f(arity);
    f.add_term(coeff, std::move(pattern));
    return f;
}

void SymForm::add_term(const Rational& coeff, BlockPattern pattern) {
    if (pattern.arity != arity_) {
        throw ArityMismatch("pattern arity " + std::to_string(pattern.arity) +
                            " in a form of arity " + std::to_string(arity_));
    }
    pattern.canonicalize();
    terms_.emplace_back(coeff, std::move(pattern));
    canonicalize();
}

void SymForm::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) {
        const auto key = [](const BlockPattern& p) {
            std::vector<std::pair<std::vector<int>, std::string>> k;
            for (const auto& [slots, map] : p.blocks) k.emplace_back(slots, map.to_string());
            return k;
        };
        return key(a.second) < key(b.second);
    });
    std::vector<std::pair<Rational, BlockPattern>> merged;
    for (auto& term : terms_) {
        if (!merged.empty() && merged.back().second == term.second) {
            merged.back().first += term.first;
        } else {
            merged.push_back(std::move(term));
        }
    }
    std::erase_if(merged, [](const auto& t) { return t.first == 0; });
    terms_ = std::move(merged);
}

RatFunc SymForm::evaluate(std::span<const RatFunc> args) const {
    if (static_cast<int>(args.size()) != arity_) {
        throw ArityMismatch("expected " + std::to_string(arity_) + " arguments, got " +
                            std::to_string(args.size()));
    }
    const bool all_equal =
        std::all_of(args.begin(), args.end(), [&](const RatFunc& a) { return a == args[0]; });

    const auto term_value = [&](const BlockPattern& pattern,
                                std::span<const int> perm) {
        RatFunc product(Rational(1));
        for (const auto& [slots, map] : pattern.blocks) {
            RatFunc arg(Rational(1));
            for (int s : slots) arg *= args[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])];
            product *= map.apply(arg);
        }
        return product;
    };

    std::vector<int> perm(static_cast<std::size_t>(arity_));
    std::iota(perm.begin(), perm.end(), 0);

    RatFunc total;
    if (all_equal) {
        // Every permutation contributes the same value on the diagonal.
        for (const auto& [coeff, pattern] : terms_) {
            total += RatFunc(coeff) * term_value(pattern, perm);
        }
        return total;
    }
    do {
        for (const auto& [coeff, pattern] : terms_) {
            total += RatFunc(coeff) * term_value(pattern, perm);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    total *= RatFunc(make_rational(1, factorial(arity_)));
    return total;
}

RatFunc SymForm::trace(const RatFunc& x) const {
    std::vector<RatFunc> args(static_cast<std::size_t>(arity_), x);
    return evaluate(args);
}

RatFunc SymForm::partial_trace(int k, const RatFunc& x) const {
    if (k < 0 || k > arity_) {
        throw ArityMismatch("partial trace count " + std::to_string(k) + " outside 0.." +
                            std::to_string(arity_));
    }
    std::vector<RatFunc> args(static_cast<std::size_t>(arity_), RatFunc(Rational(1)));
    for (int i = 0; i < k; ++i) args[static_cast<std::size_t>(i)] = x;
    return evaluate(args);
}

SymForm& SymForm::operator+=(const SymForm& rhs) {
    if (rhs.arity_ != arity_) throw ArityMismatch("adding forms of different arity");
    for (const auto& [coeff, pattern] : rhs.terms_) terms_.emplace_back(coeff, pattern);
    canonicalize();
    return *this;
}

SymForm& SymForm::operator*=(const Rational& c) {
    for (auto& [coeff, pattern] : terms_) coeff *= c;
    canonicalize();
    return *this;
}

std::string SymForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [coeff, pattern] : terms_) {
        const bool negative = coeff < 0;
        Rational mag = negative ? Rational(-coeff) : coeff;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        out << kappafeq::to_string(mag) << "*" << pattern.to_string();
    }
    return out.str();
}

SymForm b4_lift(const SymForm& B) {
    if (B.arity() != 2) {
        throw ArityMismatch("lift requires a biadditive form, got arity " +
                            std::to_string(B.arity()));
    }
    // The three ways of pairing four slots into the two original ones.
    static const int kPairings[3][2][2] = {
        {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    SymForm lifted(4);
    const Rational third = make_rational(1, 3);
    for (const auto& [coeff, pattern] : B.terms()) {
        for (const auto& pairing : kPairings) {
            BlockPattern p;
            p.arity = 4;
            for (const auto& [slots, map] : pattern.blocks) {
                std::vector<int> merged;
                for (int s : slots) {
                    merged.push_back(pairing[s][0]);
                    merged.push_back(pairing[s][1]);
                }
                p.blocks.emplace_back(std::move(merged), map);
            }
            lifted.add_term(coeff * third, std::move(p));
        }
    }
    return lifted;
}

RatFunc s_constraint_defect(const SymForm& F, std::span<const RatFunc> args) {
    const int n = F.arity();
    if (static_cast<int>(args.size()) != n + 1) {
        throw ArityMismatch("constraint needs " + std::to_string(n + 1) + " arguments, got " +
                            std::to_string(args.size()));
    }
    std::vector<int> perm(static_cast<std::size_t>(n + 1));
    std::iota(perm.begin(), perm.end(), 0);
    RatFunc total;
    std::vector<RatFunc> head(static_cast<std::size_t>(n));
    std::vector<RatFunc> tail(static_cast<std::size_t>(n));
    do {
        const RatFunc& x1 = args[static_cast<std::size_t>(perm[0])];
        const RatFunc& x2 = args[static_cast<std::size_t>(perm[1])];
        // F(x1*x2, x3, ..., x_{n+1})
        head[0] = x1 * x2;
        for (int i = 2; i <= n; ++i) head[static_cast<std::size_t>(i - 1)] = args[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        total += F.evaluate(head);
        // x1 * F(x2, ..., x_{n+1})
        for (int i = 1; i <= n; ++i) tail[static_cast<std::size_t>(i - 1)] = args[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        total -= x1 * F.evaluate(tail);
        // x2 * F(x1, x3, ..., x_{n+1})
        tail[0] = x1;
        total -= x2 * F.evaluate(tail);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

SymForm lambda_family_form(const std::vector<Rational>& row, const AdditiveMap& a) {
    const int n = static_cast<int>(row.size());
    SymForm f(n);
    for (int j = 1; j <= n; ++j) {
        BlockPattern p;
        p.arity = n;
        std::vector<int> a_slots;
        for (int s = 0; s < j; ++s) a_slots.push_back(s);
        p.blocks.emplace_back(std::move(a_slots), a);
        for (int s = j; s < n; ++s) {
            p.blocks.emplace_back(std::vector<int>{s}, AdditiveMap::identity());
        }
        f.add_term(row[static_cast<std::size_t>(j - 1)], std::move(p));
    }
    return f;
}

}  // namespace kappafeq

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

#include "kappafeq/parser.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <utility>
#include <vector>

namespace kappafeq {

namespace {

// One product shape while a form is being assembled.
struct SymProduct {
    Rational coeff{1};
    std::vector<std::pair<std::vector<int>, AdditiveMap>> blocks;
};
using SymSum = std::vector<SymProduct>;

using Value = std::variant<RatFunc, AdditiveMap, SymSum>;

struct Token {
    enum class Kind { Integer, Var, Map, Id, LParen, RParen, LBrace, RBrace, Comma,
                      Plus, Minus, Star, Slash, Caret, End };
    Kind kind;
    std::size_t pos;
    BigInt value;  // for Integer
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            tokens.push_back({Token::Kind::Integer, start, BigInt(text.substr(start, i - start))});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
            const std::string word = text.substr(start, i - start);
            if (word == "t") {
                tokens.push_back({Token::Kind::Var, start, {}});
            } else if (word == "D") {
                tokens.push_back({Token::Kind::Map, start, {}});
            } else if (word == "id") {
                tokens.push_back({Token::Kind::Id, start, {}});
            } else {
                throw ParseError("unknown name '" + word + "'", start);
            }
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '(': kind = Token::Kind::LParen; break;
            case ')': kind = Token::Kind::RParen; break;
            case '{': kind = Token::Kind::LBrace; break;
            case '}': kind = Token::Kind::RBrace; break;
            case ',': kind = Token::Kind::Comma; break;
            case '+': kind = Token::Kind::Plus; break;
            case '-': kind = Token::Kind::Minus; break;
            case '*': kind = Token::Kind::Star; break;
            case '/': kind = Token::Kind::Slash; break;
            case '^': kind = Token::Kind::Caret; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        tokens.push_back({kind, i, {}});
        ++i;
    }
    tokens.push_back({Token::Kind::End, text.size(), {}});
    return tokens;
}

/// Constant field elements double as scalars for maps and forms.
std::optional<Rational> as_scalar(const Value& v) {
    if (const RatFunc* r = std::get_if<RatFunc>(&v)) {
        if (r->den().is_one() && (r->num().is_zero() || *r->num().degree() == 0)) {
            return r->num().is_zero() ? Rational(0) : r->num().coeff(0);
        }
    }
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(lex(text)) {}

    Value parse() {
        Value v = expr();
        expect(Token::Kind::End, "trailing input");
        return v;
    }

private:
    static constexpr int kMaxDepth = 200;

    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }
    void expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind) throw ParseError("expected " + what, peek().pos);
        ++pos_;
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& parser) : parser(parser) {
            if (++parser.depth_ > kMaxDepth) {
                throw ParseError("expression nested too deeply", parser.peek().pos);
            }
        }
        ~DepthGuard() { --parser.depth_; }
        Parser& parser;
    };

    Value expr() {
        DepthGuard guard(*this);
        Value lhs = term();
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            const Token op = take();
            Value rhs = term();
            lhs = add(std::move(lhs), std::move(rhs), op.kind == Token::Kind::Minus, op.pos);
        }
        return lhs;
    }

    Value term() {
        Value lhs = factor();
        while (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Slash) {
            const Token op = take();
            Value rhs = factor();
            lhs = op.kind == Token::Kind::Star ? mul(std::move(lhs), std::move(rhs), op.pos)
                                               : div(std::move(lhs), std::move(rhs), op.pos);
        }
        return lhs;
    }

    Value factor() {
        if (peek().kind == Token::Kind::Minus) {
            const Token op = take();
            return negate(factor(), op.pos);
        }
        if (peek().kind == Token::Kind::Plus) {
            take();
            return factor();
        }
        Value base = primary();
        if (peek().kind == Token::Kind::Caret) {
            const Token op = take();
            long sign = 1;
            if (peek().kind == Token::Kind::Minus) {
                take();
                sign = -1;
            }
            if (peek().kind != Token::Kind::Integer) {
                throw ParseError("expected an integer exponent", peek().pos);
            }
            const Token e = take();
            if (e.value > 64) throw ParseError("exponent too large", e.pos);
            base = power(std::move(base), sign * static_cast<long>(e.value), op.pos);
        }
        // A slot set turns a map into one block of a form.
        if (peek().kind == Token::Kind::LParen && pos_ + 1 < tokens_.size() &&
            tokens_[pos_ + 1].kind == Token::Kind::LBrace) {
            base = slotted(std::move(base));
        }
        return base;
    }

    Value primary() {
        const Token tok = take();
        switch (tok.kind) {
            case Token::Kind::Integer:
                return RatFunc(Rational(tok.value));
            case Token::Kind::Var:
                return RatFunc::variable();
            case Token::Kind::Map:
                return AdditiveMap::derivation(1);
            case Token::Kind::Id:
                return AdditiveMap::identity();
            case Token::Kind::LParen: {
                Value inner = expr();
                expect(Token::Kind::RParen, "')'");
                return inner;
            }
            default:
                throw ParseError("expected a value", tok.pos);
        }
    }

    Value slotted(Value base) {
        const std::size_t at = peek().pos;
        AdditiveMap* map = std::get_if<AdditiveMap>(&base);
        if (!map) throw ParseError("slot sets apply to maps only", at);
        expect(Token::Kind::LParen, "'('");
        expect(Token::Kind::LBrace, "'{'");
        std::vector<int> slots;
        while (true) {
            if (peek().kind != Token::Kind::Integer) {
                throw ParseError("expected a slot index", peek().pos);
            }
            const Token idx = take();
            if (idx.value < 1 || idx.value > 64) throw ParseError("slot index out of range", idx.pos);
            slots.push_back(static_cast<int>(idx.value) - 1);
            if (peek().kind == Token::Kind::Comma) {
                take();
                continue;
            }
            break;
        }
        expect(Token::Kind::RBrace, "'}'");
        expect(Token::Kind::RParen, "')'");
        SymProduct product;
        product.blocks.emplace_back(std::move(slots), std::move(*map));
        return SymSum{std::move(product)};
    }

    Value negate(Value v, std::size_t) {
        if (RatFunc* r = std::get_if<RatFunc>(&v)) return -*r;
        if (AdditiveMap* m = std::get_if<AdditiveMap>(&v)) return -*m;
        SymSum& s = std::get<SymSum>(v);
        for (auto& p : s) p.coeff = -p.coeff;
        return v;
    }

    Value add(Value lhs, Value rhs, bool minus, std::size_t at) {
        if (minus) rhs = negate(std::move(rhs), at);
        if (lhs.index() != rhs.index()) {
            throw ParseError("cannot add values of different kinds", at);
        }
        if (RatFunc* a = std::get_if<RatFunc>(&lhs)) return *a + std::get<RatFunc>(rhs);
        if (AdditiveMap* a = std::get_if<AdditiveMap>(&lhs)) return *a + std::get<AdditiveMap>(rhs);
        SymSum& a = std::get<SymSum>(lhs);
        SymSum& b = std::get<SymSum>(rhs);
        a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
        return lhs;
    }

    Value mul(Value lhs, Value rhs, std::size_t at) {
        if (std::holds_alternative<RatFunc>(lhs) && std::holds_alternative<RatFunc>(rhs)) {
            return std::get<RatFunc>(lhs) * std::get<RatFunc>(rhs);
        }
        // Scalar on either side scales a map or a form.
        for (int swap = 0; swap < 2; ++swap) {
            if (const auto scalar = as_scalar(lhs)) {
                if (AdditiveMap* m = std::get_if<AdditiveMap>(&rhs)) return *m * *scalar;
                if (SymSum* s = std::get_if<SymSum>(&rhs)) {
                    for (auto& p : *s) p.coeff *= *scalar;
                    return rhs;
                }
            }
            std::swap(lhs, rhs);
        }
        if (std::holds_alternative<SymSum>(lhs) && std::holds_alternative<SymSum>(rhs)) {
            SymSum& a = std::get<SymSum>(lhs);
            SymSum& b = std::get<SymSum>(rhs);
            SymSum out;
            for (const auto& pa : a) {
                for (const auto& pb : b) {
                    SymProduct p;
                    p.coeff = pa.coeff * pb.coeff;
                    p.blocks = pa.blocks;
                    p.blocks.insert(p.blocks.end(), pb.blocks.begin(), pb.blocks.end());
                    out.push_back(std::move(p));
                }
            }
            return out;
        }
        if (std::holds_alternative<AdditiveMap>(lhs) && std::holds_alternative<AdditiveMap>(rhs)) {
            throw ParseError("maps do not multiply; use D^k for compositions", at);
        }
        throw ParseError("cannot multiply these values", at);
    }

    Value div(Value lhs, Value rhs, std::size_t at) {
        if (std::holds_alternative<RatFunc>(lhs) && std::holds_alternative<RatFunc>(rhs)) {
            const RatFunc& d = std::get<RatFunc>(rhs);
            if (d.is_zero()) throw ParseError("division by zero", at);
            return std::get<RatFunc>(lhs) / d;
        }
        const auto scalar = as_scalar(rhs);
        if (!scalar) throw ParseError("can only divide by a field element", at);
        if (*scalar == 0) throw ParseError("division by zero", at);
        const Rational inv = make_rational(denominator(*scalar), numerator(*scalar));
        if (AdditiveMap* m = std::get_if<AdditiveMap>(&lhs)) return *m * inv;
        SymSum& s = std::get<SymSum>(lhs);
        for (auto& p : s) p.coeff *= inv;
        return lhs;
    }

    Value power(Value base, long e, std::size_t at) {
        if (RatFunc* r = std::get_if<RatFunc>(&base)) {
            if (e < 0 && r->is_zero()) throw ParseError("negative power of zero", at);
            return r->pow(e);
        }
        if (AdditiveMap* m = std::get_if<AdditiveMap>(&base)) {
            if (e < 0) throw ParseError("maps cannot be inverted", at);
            AdditiveMap out = AdditiveMap::identity();
            for (long i = 0; i < e; ++i) out = out.compose(*m);
            return out;
        }
        throw ParseError("cannot exponentiate a form", at);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

SymForm assemble_form(const SymSum& sum) {
    int arity = 0;
    for (const auto& product : sum) {
        for (const auto& [slots, map] : product.blocks) {
            for (int s : slots) arity = std::max(arity, s + 1);
        }
    }
    if (arity == 0) throw ParseError("form has no slots", 0);
    SymForm form(arity);
    for (const auto& product : sum) {
        BlockPattern pattern;
        pattern.arity = arity;
        pattern.blocks = product.blocks;
        try {
            form.add_term(product.coeff, std::move(pattern));
        } catch (const InvalidInput& e) {
            throw ParseError(std::string("bad slot pattern: ") + e.what(), 0);
        }
    }
    return form;
}

}  // namespace

Parsed parse_expr(const std::string& text) {
    Value v = Parser(text).parse();
    if (RatFunc* r = std::get_if<RatFunc>(&v)) return std::move(*r);
    if (AdditiveMap* m = std::get_if<AdditiveMap>(&v)) return std::move(*m);
    return assemble_form(std::get<SymSum>(v));
}

RatFunc parse_ratfunc(const std::string& text) {
    Parsed p = parse_expr(text);
    if (RatFunc* r = std::get_if<RatFunc>(&p)) return std::move(*r);
    throw ParseError("expected a field element, found a map or form", 0);
}

AdditiveMap parse_map(const std::string& text) {
    Parsed p = parse_expr(text);
    if (AdditiveMap* m = std::get_if<AdditiveMap>(&p)) return std::move(*m);
    if (RatFunc* r = std::get_if<RatFunc>(&p)) {
        if (r->is_zero()) return AdditiveMap();  // the zero map renders as "0"
    }
    throw ParseError("expected an additive map expression", 0);
}

SymForm parse_form(const std::string& text) {
    Parsed p = parse_expr(text);
    if (SymForm* f = std::get_if<SymForm>(&p)) return std::move(*f);
    throw ParseError("expected a form with slot sets like D({1,2})", 0);
}

}  // namespace kappafeq

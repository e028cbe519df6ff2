#pragma once

/**
 * @file expr.hpp
 * @brief Expression parser: integer literals, symbols, + - * / ^ and
 *        parentheses, evaluated in any ring.
 *
 * Grammar (no implicit multiplication; ^ binds tighter than unary minus,
 * so -x^2 is -(x^2)):
 *
 *     sum     := product (('+' | '-') product)*
 *     product := unary (('*' | '/') unary)*
 *     unary   := ('-' | '+') unary | power
 *     power   := atom ('^' INTEGER)?
 *     atom    := INTEGER | SYMBOL | '(' sum ')'
 *
 * Error positions are 1-based character offsets.
 */

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "../bigint.hpp"
#include "../domain.hpp"
#include "../errors.hpp"

namespace rings {

struct Expr {
    enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    std::size_t pos;
    std::string text;
    std::uint64_t exponent = 0;
    std::vector<Expr> args;
};

namespace detail {

struct Token {
    enum class Kind { Number, Symbol, Op, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::Number, s.substr(i, j - i), i + 1});
            i = j;
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Kind::Symbol, s.substr(i, j - i), i + 1});
            i = j;
        } else if (std::string("+-*/^()").find(static_cast<char>(c)) != std::string::npos) {
            out.push_back({Token::Kind::Op, std::string(1, static_cast<char>(c)), i + 1});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", i + 1);
        }
    }
    out.push_back({Token::Kind::End, "", s.size() + 1});
    return out;
}

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : toks_(tokenize(s)) {}

    Expr parse() {
        if (peek().kind == Token::Kind::End) throw ParseError("empty expression", peek().pos);
        Expr e = sum();
        if (peek().kind != Token::Kind::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return e;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    bool is_op(const char* op) const { return peek().kind == Token::Kind::Op && peek().text == op; }

    Expr sum() {
        Expr e = product();
        while (is_op("+") || is_op("-")) {
            auto t = toks_[i_++];
            Expr r = product();
            e = Expr{t.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, t.pos, "", 0, {std::move(e), std::move(r)}};
        }
        return e;
    }

    Expr product() {
        Expr e = unary();
        while (is_op("*") || is_op("/")) {
            auto t = toks_[i_++];
            Expr r = unary();
            e = Expr{t.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, t.pos, "", 0, {std::move(e), std::move(r)}};
        }
        return e;
    }

    Expr unary() {
        if (is_op("-")) {
            auto pos = toks_[i_++].pos;
            return Expr{Expr::Kind::Neg, pos, "", 0, {unary()}};
        }
        if (is_op("+")) {
            ++i_;
            return unary();
        }
        return power();
    }

    Expr power() {
        Expr base = atom();
        if (!is_op("^")) return base;
        auto pos = toks_[i_++].pos;
        const Token& t = peek();
        if (t.kind != Token::Kind::Number) throw ParseError("exponent must be a non-negative integer literal", t.pos);
        Integer v(t.text);
        if (v > Integer("18446744073709551615")) throw ParseError("exponent too large", t.pos);
        ++i_;
        if (is_op("^")) throw ParseError("chained exponent needs parentheses", peek().pos);
        return Expr{Expr::Kind::Pow, pos, "", to_u64(v), {std::move(base)}};
    }

    Expr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number: ++i_; return Expr{Expr::Kind::Number, t.pos, t.text, 0, {}};
            case Token::Kind::Symbol: ++i_; return Expr{Expr::Kind::Symbol, t.pos, t.text, 0, {}};
            case Token::Kind::End: throw ParseError("unexpected end of input", t.pos);
            default: break;
        }
        if (t.text != "(") throw ParseError("unexpected '" + t.text + "'", t.pos);
        ++i_;
        Expr e = sum();
        if (!is_op(")")) throw ParseError("expected ')'", peek().pos);
        ++i_;
        return e;
    }

    static std::uint64_t to_u64(const Integer& v) {
        std::uint64_t r = 0;
        mpz_export(&r, nullptr, -1, sizeof r, 0, 0, v.get_mpz_t());
        return r;
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

}  // namespace detail

inline Expr parse_expr(const std::string& text) { return detail::ExprParser(text).parse(); }

/// Value of `e` in ring `r`. Division is ring division in fields and
/// multiplication by the inverse of a unit elsewhere.
template <class R>
typename R::Elem evaluate(const R& r, const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Number: return r.from_integer(Integer(e.text));
        case K::Symbol: {
            if constexpr (requires { r.symbol(e.text); }) {
                if (auto s = r.symbol(e.text)) return *s;
            }
            throw ParseError("unknown symbol '" + e.text + "'", e.pos);
        }
        case K::Neg: return r.neg(evaluate(r, e.args[0]));
        case K::Add: return r.add(evaluate(r, e.args[0]), evaluate(r, e.args[1]));
        case K::Sub: return r.sub(evaluate(r, e.args[0]), evaluate(r, e.args[1]));
        case K::Mul: return r.mul(evaluate(r, e.args[0]), evaluate(r, e.args[1]));
        case K::Pow: return power(r, evaluate(r, e.args[0]), e.exponent);
        case K::Div: {
            auto a = evaluate(r, e.args[0]);
            auto b = evaluate(r, e.args[1]);
            if (r.is_zero(b)) throw ParseError("division by zero", e.pos);
            if constexpr (R::is_field) {
                return r.div(a, b);
            } else {
                if (!r.is_unit(b)) throw ParseError("division by a non-unit in " + r.describe(), e.pos);
                return *r.divide_exact(a, b);
            }
        }
    }
    throw ParseError("malformed expression", e.pos);
}

/// parse_expr followed by evaluate.
template <class R>
typename R::Elem parse(const R& r, const std::string& text) {
    return evaluate(r, parse_expr(text));
}

}  // namespace rings

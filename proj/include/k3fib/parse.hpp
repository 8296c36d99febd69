#pragma once

/// Recursive-descent parser for rational-function expressions in t.
///
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' nonneg-int)?
///   base   := integer-literal | 't' | '(' expr ')' | '-' factor
///
/// Rationals are written with the division operator ("3/4"); '^' binds
/// tighter than '/', so 1/2^2 is 1/4 and 3/2^2 is 3/4.

#include "k3fib/polynomial.hpp"
#include "k3fib/ratfunc_core.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace k3fib {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& src) : src_(src) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected character '" + std::string(1, src_[pos_]) + "'", pos_);
        return r;
    }

private:
    RationalFunction expr() {
        RationalFunction r = term();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                r = r + term();
            } else if (accept('-')) {
                r = r - term();
            } else {
                return r;
            }
        }
    }

    RationalFunction term() {
        RationalFunction r = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                r = r * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RationalFunction d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                r = r / d;
            } else {
                return r;
            }
        }
    }

    RationalFunction factor() {
        RationalFunction b = base();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw ParseError("expected nonnegative integer exponent", at);
            unsigned e = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                e = e * 10 + static_cast<unsigned>(src_[pos_] - '0');
                if (e > 4096) throw ParseError("exponent too large", at);
                ++pos_;
            }
            return b.pow(static_cast<int>(e));
        }
        return b;
    }

    RationalFunction base() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == 't') {
            ++pos_;
            return RationalFunction(Polynomial::variable());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int v(0);
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                v = v * 10 + (src_[pos_] - '0');
                ++pos_;
            }
            return RationalFunction(Polynomial(Rat(v)));
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    bool accept(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse an expression into a normalized rational function.
/// Throws ParseError (with position) on bad syntax or division by the
/// zero function.
inline RationalFunction parse_ratfunc(const std::string& expr) {
    return detail::ExprParser(expr).parse();
}

}  // namespace k3fib

#pragma once

// Recursive-descent parser for the expression grammar
//   Expr   := ['-'] Term { ('+'|'-') Term }
//   Term   := Factor { ('*'|'/') Factor }
//   Factor := Base ['^' Integer]
//   Base   := 'x' | unsigned-integer | '(' Expr ')'
// producing canonical RatFunc values, plus the parser for multiplier strings
// of formal exponential constants ("2", "-1", "3^(1/2)", "2^(1/2)*3").
// Errors carry 1-based line/column positions.

#include <cctype>
#include <string>

#include "difftrans/error.hpp"
#include "difftrans/exp_const.hpp"
#include "difftrans/polynomial.hpp"
#include "difftrans/ratfunc.hpp"

namespace difftrans {

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    RatFunc parse() {
        skip_ws();
        RatFunc v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        bool neg = false;
        skip_ws();
        if (accept('-')) neg = true;
        RatFunc v = term();
        if (neg) v = -v;
        while (true) {
            skip_ws();
            if (accept('+')) {
                v += term();
            } else if (accept('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    RatFunc term() {
        RatFunc v = factor();
        while (true) {
            skip_ws();
            if (accept('*')) {
                v *= factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RatFunc d = factor();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by the zero polynomial");
                }
                v /= d;
            } else {
                return v;
            }
        }
    }

    RatFunc factor() {
        RatFunc v = base();
        skip_ws();
        if (accept('^')) {
            long e = integer();
            if (e >= 0) return pow_ratfunc(v, static_cast<unsigned long>(e));
            if (v.is_zero()) fail("zero raised to a negative power");
            return pow_ratfunc(v, static_cast<unsigned long>(-e)).inverse();
        }
        return v;
    }

    RatFunc base() {
        skip_ws();
        if (accept('x')) return RatFunc::x();
        if (accept('(')) {
            RatFunc v = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) return RatFunc(Rat(read_uint()));
        fail("expected 'x', a number, or '('");
    }

    long integer() {
        skip_ws();
        bool neg = accept('-');
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent");
        Int v = read_uint();
        if (v > 4096) fail("exponent too large");
        long e = v.convert_to<long>();
        return neg ? -e : e;
    }

    Int read_uint() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Int(text_.substr(start, pos_ - start));
    }

    static RatFunc pow_ratfunc(const RatFunc& b, unsigned long e) {
        RatFunc r(1), acc = b;
        while (e) {
            if (e & 1) r *= acc;
            if (e >>= 1) acc *= acc;
        }
        return r;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RatFunc parse_ratfunc(const std::string& text) { return detail::ExprParser(text).parse(); }

inline Poly parse_poly(const std::string& text) {
    RatFunc f = parse_ratfunc(text);
    if (!f.is_polynomial()) throw ParseError("expected a polynomial", 1, 1);
    return f.num();
}

// Multiplier grammar:  Mult := ['-'] MFactor { '*' MFactor }
//                      MFactor := UInt ['/' UInt] ['^' Exponent]
//                      Exponent := ['-'] UInt | '(' ['-'] UInt ['/' UInt] ')'
inline ExpConst parse_expconst(const std::string& text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError(msg, 1, static_cast<int>(pos) + 1);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto peek = [&]() -> char { return pos < text.size() ? text[pos] : '\0'; };
    auto accept = [&](char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    };
    auto read_uint = [&]() -> Int {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return Int(text.substr(start, pos - start));
    };
    auto read_rat = [&]() -> Rat {
        skip_ws();
        bool neg = accept('-');
        Int n = read_uint();
        Int d = 1;
        skip_ws();
        if (accept('/')) d = read_uint();
        if (d == 0) fail("zero denominator");
        Rat r(n, d);
        return neg ? -r : r;
    };

    skip_ws();
    bool negative = accept('-');
    ExpConst value = ExpConst::one();
    while (true) {
        skip_ws();
        Int bn = read_uint();
        Int bd = 1;
        skip_ws();
        if (accept('/')) bd = read_uint();
        if (bn == 0 || bd == 0) fail("multiplier must be nonzero");
        Rat base(bn, bd);
        Rat e = 1;
        skip_ws();
        if (accept('^')) {
            skip_ws();
            if (accept('(')) {
                e = read_rat();
                skip_ws();
                if (!accept(')')) fail("expected ')'");
            } else {
                bool neg = accept('-');
                Int n = read_uint();
                e = Rat(n);
                if (neg) e = -e;
            }
        }
        value = value * ExpConst::from_rational(base).pow(e);
        skip_ws();
        if (!accept('*')) break;
    }
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing input");
    if (negative) value = value * ExpConst::from_rational(Rat(-1));
    return value;
}

}  // namespace difftrans

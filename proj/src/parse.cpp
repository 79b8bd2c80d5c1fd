#include "gtb/parse.hpp"

#include <cctype>

#include "gtb/errors.hpp"

namespace gtb {
namespace {

// Recursive-descent parser folding directly into exact ScalarField values.
//
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' natural)?
//   primary := natural | 'i' | variable | '(' expr ')'
class Parser {
public:
    Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

    ScalarField run() {
        ScalarField v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected trailing input");
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    ScalarField expr() {
        ScalarField v = term();
        for (;;) {
            if (consume('+')) {
                v += term();
            } else if (consume('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    ScalarField term() {
        ScalarField v = unary();
        for (;;) {
            if (consume('*')) {
                v *= unary();
            } else if (consume('/')) {
                std::size_t at = pos_;
                ScalarField d = unary();
                if (d.is_zero()) throw SyntaxError(at, "division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    ScalarField unary() {
        if (consume('-')) return -unary();
        return power();
    }

    ScalarField power() {
        ScalarField base = primary();
        if (!consume('^')) return base;
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError(at, "exponent must be a nonnegative integer");
        unsigned long e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (e > 4096) throw SyntaxError(at, "exponent too large");
            ++pos_;
        }
        ScalarField r = ScalarField::one(nvars_);
        for (unsigned long k = 0; k < e; ++k) r *= base;
        return r;
    }

    ScalarField primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            ScalarField v = expr();
            if (!consume(')')) throw SyntaxError(open, "unbalanced parenthesis");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_];
                ++pos_;
            }
            return ScalarField::constant(nvars_, GaussRat::from_decimal_string(digits));
        }
        if (c == 'i') {
            ++pos_;
            return ScalarField::constant(nvars_, GaussRat::imaginary_unit());
        }
        if (c == 'x') {
            std::size_t at = pos_;
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError(at, "variable index expected after 'x'");
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_];
                ++pos_;
            }
            unsigned long k = std::stoul(digits);
            if (k < 1 || k > nvars_) throw UnknownVariable("x" + digits, nvars_);
            return ScalarField::variable(nvars_, k - 1);
        }
        throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

ScalarField sf_parse(std::string_view text, std::size_t nvars) {
    return Parser(text, nvars).run();
}

}  // namespace gtb

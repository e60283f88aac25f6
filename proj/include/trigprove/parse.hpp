#pragma once

// Recursive-descent parser for the printed expression grammar.
// Whitespace-insensitive; literal "0" terms (padding) are dropped; sums
// inside trig arguments stay atomic (sin(x + pi/3) is one factor, never
// pre-expanded). Term order follows the input text.

#include "trigprove/expr.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace trigprove {

struct SyntaxError : std::runtime_error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expression parse_expression() {
        Expression e;
        skip_ws();
        bool negative = consume_sign();
        while (true) {
            Term t = parse_term(negative);
            if (!t.coef.is_zero()) {
                bool merged = false;
                for (auto& existing : e.terms) {
                    if (existing.same_factors(t)) {
                        existing.coef += t.coef;
                        merged = true;
                        break;
                    }
                }
                if (!merged) e.terms.push_back(std::move(t));
            }
            skip_ws();
            if (pos_ >= text_.size()) break;
            if (peek() == '+') {
                ++pos_;
                negative = false;
            } else if (peek() == '-') {
                ++pos_;
                negative = true;
            } else {
                fail("expected '+' or '-' between terms");
            }
            skip_ws();
        }
        // A cancelled pair of like terms leaves a zero coefficient behind.
        std::erase_if(e.terms, [](const Term& t) { return t.coef.is_zero(); });
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume_sign() {
        if (peek() == '-') {
            ++pos_;
            skip_ws();
            return true;
        }
        if (peek() == '+') {
            ++pos_;
            skip_ws();
        }
        return false;
    }

    bool consume(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    bool lookahead_word(const char* w) {
        skip_ws();
        std::size_t n = std::string_view(w).size();
        return text_.substr(pos_, n) == w;
    }

    bool consume_word(const char* w) {
        if (!lookahead_word(w)) return false;
        pos_ += std::string_view(w).size();
        return true;
    }

    BigInt parse_uint() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        BigInt v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    // sqrt(2) | sqrt(3) | sqrt(6)
    SurdScalar parse_sqrt() {
        expect('(');
        BigInt k = parse_uint();
        expect(')');
        if (k == 2) return SurdScalar::sqrt2();
        if (k == 3) return SurdScalar::sqrt3();
        if (k == 6) return SurdScalar::sqrt6();
        fail("sqrt argument must be 2, 3 or 6");
    }

    // Parenthesized surd sum, e.g. (1 + sqrt(2)) or (3*sqrt(2) - sqrt(6)).
    SurdScalar parse_surd_sum() {
        SurdScalar total = SurdScalar::zero();
        bool negative = consume_sign();
        while (true) {
            SurdScalar atom;
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                BigInt n = parse_uint();
                if (consume('*')) {
                    if (!consume_word("sqrt")) fail("expected sqrt after '*'");
                    atom = parse_sqrt() * Rational(n);
                } else {
                    atom = SurdScalar(Rational(n));
                }
            } else if (consume_word("sqrt")) {
                atom = parse_sqrt();
            } else {
                fail("expected a surd component");
            }
            total += negative ? -atom : atom;
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                negative = false;
            } else if (peek() == '-') {
                ++pos_;
                negative = true;
            } else {
                break;
            }
        }
        return total;
    }

    // Linear form inside a trig argument: signed sum of k*x and phase parts.
    Angle parse_angle() {
        Angle angle;
        bool negative = consume_sign();
        bool any = false;
        while (true) {
            skip_ws();
            std::int64_t sign = negative ? -1 : 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                BigInt n = parse_uint();
                if (consume('*')) {
                    if (consume_word("x")) {
                        angle.x_coef += sign * n.convert_to<std::int64_t>();
                    } else if (consume_word("pi")) {
                        Rational mult(n);
                        if (consume('/')) mult /= Rational(parse_uint());
                        angle.phase += negative ? -mult : mult;
                    } else {
                        fail("expected x or pi");
                    }
                } else if (consume('/')) {
                    // bare rational inside an argument, e.g. sin(1/2) is rejected
                    fail("phase must be a multiple of pi");
                } else {
                    if (n != 0) fail("bare integers are not valid angles");
                }
            } else if (consume_word("pi")) {
                Rational mult(1);
                if (consume('/')) mult /= Rational(parse_uint());
                angle.phase += negative ? -mult : mult;
            } else if (consume_word("x")) {
                angle.x_coef += sign;
            } else {
                fail("expected angle component");
            }
            any = true;
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                negative = false;
            } else if (peek() == '-') {
                ++pos_;
                negative = true;
            } else {
                break;
            }
        }
        if (!any) fail("empty trig argument");
        return angle;
    }

    Term parse_term(bool negative) {
        TermBuilder builder(negative ? -SurdScalar::one() : SurdScalar::one());
        bool saw_atom = false;
        bool zero_literal = false;
        while (true) {
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                BigInt n = parse_uint();
                if (n == 0) zero_literal = true;
                builder.multiply_scalar(SurdScalar(Rational(n)));
            } else if (consume_word("sqrt")) {
                builder.multiply_scalar(parse_sqrt());
            } else if (lookahead_word("sin") || lookahead_word("cos")) {
                TrigKind kind = consume_word("sin") ? TrigKind::Sin
                                                    : (consume_word("cos"), TrigKind::Cos);
                expect('(');
                Angle angle = parse_angle();
                expect(')');
                std::uint32_t exponent = 1;
                skip_ws();
                if (text_.substr(pos_, 2) == "**") {
                    pos_ += 2;
                    exponent = parse_uint().convert_to<std::uint32_t>();
                    if (exponent == 0) fail("exponent must be positive");
                }
                builder.multiply_power(kind, angle, exponent);
            } else if (peek() == '(') {
                ++pos_;
                builder.multiply_scalar(parse_surd_sum());
                expect(')');
            } else {
                fail("expected a coefficient or trig factor");
            }
            saw_atom = true;
            skip_ws();
            if (peek() == '*' && text_.substr(pos_, 2) != "**") {
                ++pos_;
            } else if (peek() == '/') {
                ++pos_;
                BigInt d = parse_uint();
                if (d == 0) fail("division by zero");
                builder.multiply_scalar(SurdScalar(Rational(1, d)));
                skip_ws();
                if (peek() == '*' && text_.substr(pos_, 2) != "**") {
                    ++pos_;
                } else {
                    break;
                }
            } else {
                break;
            }
        }
        if (!saw_atom) fail("empty term");
        (void)zero_literal;
        return std::move(builder).build();
    }
};

}  // namespace detail

inline Expression parse(std::string_view text) {
    detail::Parser p(text);
    return p.parse_expression();
}

}  // namespace trigprove

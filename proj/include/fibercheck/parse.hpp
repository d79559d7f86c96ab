#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "fibercheck/polynomial.hpp"

namespace fibercheck {

/// Parse failure with the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

// Grammar:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := number | radical | identifier | '(' expr ')'
// number: digits('/'digits)?, radical: 's'('/'digits)?, identifier: letter digits*.
// No implicit multiplication, no division operator ('/' lives inside literals).
class PolyParser {
public:
    PolyParser(const std::string& text, const VariableSet& vars, FieldConfig field)
        : text_(text), vars_(vars), field_(field) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    Polynomial expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (text_[pos_++] == '-');
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Polynomial t = term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (peek() == '^') {
            std::size_t caret = pos_++;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("malformed exponent", caret + 1);
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            unsigned long e = std::stoul(text_.substr(start, pos_ - start));
            if (e > 64) throw ParseError("exponent too large", start);
            return b.pow(static_cast<std::uint32_t>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        std::size_t start = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(number(), vars_);
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            std::string name(1, c);
            while (std::isdigit(static_cast<unsigned char>(peek()))) name += text_[pos_++];
            if (name == "s") {
                if (!field_.is_extension())
                    throw ParseError("radical 's' is not available over the rationals", start);
                Scalar rad = Scalar::radical(field_);
                if (peek() == '/') {
                    ++pos_;
                    rad = rad * Scalar(literal_denominator(), field_).inverse();
                }
                return Polynomial::constant(rad, vars_);
            }
            auto idx = vars_.index_of(name);
            if (!idx) throw ParseError("unknown identifier '" + name + "'", start);
            return Polynomial::variable(vars_, field_, *idx);
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Scalar number() {
        Rational n{digits()};
        if (peek() == '/') {
            ++pos_;
            return Scalar(n / literal_denominator(), field_);
        }
        return Scalar(n, field_);
    }

    Rational literal_denominator() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("malformed rational literal", pos_);
        Rational d{digits()};
        if (d.is_zero()) throw ParseError("zero denominator in literal", pos_);
        return d;
    }

    mpz_class digits() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return mpz_class(text_.substr(start, pos_ - start), 10);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    const VariableSet& vars_;
    FieldConfig field_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression in the grammar above into a canonical Polynomial.
inline Polynomial parse_poly(const std::string& text, const VariableSet& vars, FieldConfig field) {
    return detail::PolyParser(text, vars, field).parse();
}

/// Parses a scalar literal ("-3", "3/4", "s/4", "1/2*s", "3/4+1/2*s").
inline Scalar parse_scalar(const std::string& text, FieldConfig field) {
    Polynomial p = parse_poly(text, VariableSet(), field);
    return p.constant_value();
}

}  // namespace fibercheck

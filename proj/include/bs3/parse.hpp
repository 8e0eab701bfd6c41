#ifndef BS3_PARSE_HPP
#define BS3_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bs3/errors.hpp"
#include "bs3/polynomial.hpp"

namespace bs3 {

namespace detail {

// poly  := ['-'] term (('+'|'-') term)*
// term  := coeff ['*'? monos] | monos
// coeff := int | int '/' int
// monos := var ['^' uint] ('*'? var ['^' uint])*
// var   := x | y | z | x<k>
class PolynomialParser {
public:
    PolynomialParser(std::string_view text, std::size_t variable_count) : text_(text), n_(variable_count) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        terms.push_back(term(negative));
        for (;;) {
            skip_ws();
            if (at_end()) {
                break;
            }
            const char c = peek();
            if (c != '+' && c != '-') {
                fail("unexpected character '" + std::string(1, c) + "'");
            }
            ++pos_;
            terms.push_back(term(c == '-'));
        }
        return Polynomial::from_terms(n_, terms);
    }

private:
    Term term(bool negative) {
        skip_ws();
        Term t{Monomial(n_), Rational(1)};
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff = coefficient();
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (!is_var_start()) {
                    fail("expected variable");
                }
                t.monomial = monomials();
            } else if (is_var_start()) {
                t.monomial = monomials();
            }
        } else if (is_var_start()) {
            t.monomial = monomials();
        } else if (at_end()) {
            fail("unexpected end of input, expected term");
        } else {
            if (std::isalpha(static_cast<unsigned char>(peek()))) {
                fail("unknown variable '" + std::string(1, peek()) + "'");
            }
            fail("expected term");
        }
        if (negative) {
            t.coeff = -t.coeff;
        }
        return t;
    }

    Rational coefficient() {
        Integer num = integer();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            const std::size_t den_pos = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                fail("expected denominator");
            }
            Integer den = integer();
            if (den == 0) {
                throw ParseError("zero denominator", den_pos);
            }
            return make_rational(num, den);
        }
        return Rational(num);
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected integer");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Monomial monomials() {
        Monomial m(n_);
        factor(m);
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (!is_var_start()) {
                    fail("expected variable");
                }
                factor(m);
            } else if (is_var_start()) {
                factor(m);
            } else if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
                fail("unknown variable '" + std::string(1, peek()) + "'");
            } else {
                return m;
            }
        }
    }

    void factor(Monomial& m) {
        const std::size_t var_pos = pos_;
        std::size_t index = 0;
        const char c = peek();
        ++pos_;
        if (c == 'x' && !at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const Integer k = integer();
            if (k < 1 || k > static_cast<long>(n_)) {
                throw ParseError("unknown variable 'x" + k.get_str() + "'", var_pos);
            }
            index = k.get_ui() - 1;
        } else {
            index = c == 'x' ? 0 : c == 'y' ? 1 : 2;
        }
        if (index >= n_) {
            throw ParseError("unknown variable '" + std::string(1, c) + "'", var_pos);
        }
        unsigned e = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const Integer k = integer();
            if (k > 10000) {
                fail("exponent too large");
            }
            e = static_cast<unsigned>(k.get_ui());
        }
        m.set(index, m[index] + e);
    }

    bool is_var_start() const {
        const char c = peek();
        return c == 'x' || c == 'y' || c == 'z';
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, std::size_t variable_count = 3) {
    if (variable_count == 0 || variable_count > kMaxVariables) {
        throw PreconditionError("variable count must be between 1 and 4");
    }
    return detail::PolynomialParser(text, variable_count).parse();
}

}  // namespace bs3

#endif  // BS3_PARSE_HPP

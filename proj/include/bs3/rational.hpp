#ifndef BS3_RATIONAL_HPP
#define BS3_RATIONAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>

#include "bs3/errors.hpp"

namespace bs3 {

/// Exact rational number. GMP keeps the value canonical: gcd(|num|, den) = 1, den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw PreconditionError("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

/// Reduced "p/q" with q omitted when 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p" or "p/q" (optional leading sign, surrounding blanks ignored). Rejects zero denominators.
inline Rational parse_rational(std::string_view text) {
    const std::size_t lead = std::min(text.find_first_not_of(" \t"), text.size());
    const std::size_t end = text.find_last_not_of(" \t") + 1;
    if (lead > 0 || end < text.size()) {
        try {
            return parse_rational(text.substr(lead, end > lead ? end - lead : 0));
        } catch (const ParseError& e) {
            throw ParseError(e.detail(), lead + e.position());
        }
    }
    std::string s(text);
    const auto slash = s.find('/');
    auto parse_int = [&](const std::string& part, std::size_t offset) {
        std::size_t i = 0;
        if (i < part.size() && (part[i] == '-' || part[i] == '+')) {
            ++i;
        }
        if (i == part.size()) {
            throw ParseError("expected integer", offset + i);
        }
        for (std::size_t k = i; k < part.size(); ++k) {
            if (part[k] < '0' || part[k] > '9') {
                throw ParseError("expected digit", offset + k);
            }
        }
        return Integer(part[0] == '+' ? part.substr(1) : part, 10);
    };
    if (slash == std::string::npos) {
        return Rational(parse_int(s, 0));
    }
    const Integer num = parse_int(s.substr(0, slash), 0);
    const Integer den = parse_int(s.substr(slash + 1), slash + 1);
    if (den == 0) {
        throw ParseError("zero denominator", slash + 1);
    }
    return make_rational(num, den);
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Integer ceil_of(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline Integer gcd_of(const Integer& a, const Integer& b) {
    Integer out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace bs3

#endif  // BS3_RATIONAL_HPP

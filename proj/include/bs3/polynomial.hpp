#ifndef BS3_POLYNOMIAL_HPP
#define BS3_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bs3/errors.hpp"
#include "bs3/monomial.hpp"
#include "bs3/rational.hpp"

namespace bs3 {

struct Term {
    Monomial monomial;
    Rational coeff;

    friend bool operator==(const Term& a, const Term& b) { return a.monomial == b.monomial && a.coeff == b.coeff; }
};

/// Sparse polynomial over Q. Terms are kept in canonical order (graded revlex,
/// largest first) with no zero coefficients, so equality is structural.
class Polynomial {
public:
    explicit Polynomial(std::size_t variable_count = 3) : n_(variable_count) {
        if (variable_count > kMaxVariables) {
            throw PreconditionError("too many variables");
        }
    }

    static Polynomial constant(const Rational& c, std::size_t variable_count = 3) {
        Polynomial p(variable_count);
        if (c != 0) {
            p.terms_.push_back({Monomial(variable_count), c});
        }
        return p;
    }

    static Polynomial variable(std::size_t index, std::size_t variable_count = 3) {
        if (index >= variable_count) {
            throw PreconditionError("variable index out of range");
        }
        Monomial m(variable_count);
        m.set(index, 1);
        return term(m, 1);
    }

    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p(m.size());
        if (c != 0) {
            p.terms_.push_back({m, c});
        }
        return p;
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    static Polynomial from_terms(std::size_t variable_count, const std::vector<Term>& terms) {
        std::map<Monomial, Rational, CanonicalGreater> acc;
        for (const auto& t : terms) {
            if (t.monomial.size() != variable_count) {
                throw PreconditionError("monomial length differs from variable count");
            }
            acc[t.monomial] += t.coeff;
        }
        return from_map(variable_count, acc);
    }

    std::size_t variable_count() const noexcept { return n_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

    unsigned total_degree() const {
        if (terms_.empty()) {
            throw PreconditionError("degree of the zero polynomial");
        }
        return terms_.front().monomial.total_degree();
    }

    Rational coefficient(const Monomial& m) const {
        for (const auto& t : terms_) {
            if (t.monomial == m) {
                return t.coeff;
            }
        }
        return 0;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, 1); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, -1); }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial out(a);
        for (auto& t : out.terms_) {
            t.coeff = -t.coeff;
        }
        return out;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial out(p.n_);
        if (c == 0) {
            return out;
        }
        out.terms_ = p.terms_;
        for (auto& t : out.terms_) {
            t.coeff *= c;
        }
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same_ring(a, b);
        std::map<Monomial, Rational, CanonicalGreater> acc;
        for (const auto& s : a.terms_) {
            for (const auto& t : b.terms_) {
                acc[s.monomial * t.monomial] += s.coeff * t.coeff;
            }
        }
        return from_map(a.n_, acc);
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Multiplies by the monomial `m`.
    Polynomial shifted(const Monomial& m) const {
        Polynomial out(*this);
        for (auto& t : out.terms_) {
            t.monomial = t.monomial * m;
        }
        return out;
    }

    Polynomial pow(unsigned e) const {
        Polynomial out = constant(1, n_);
        for (unsigned i = 0; i < e; ++i) {
            out = out * *this;
        }
        return out;
    }

private:
    static void check_same_ring(const Polynomial& a, const Polynomial& b) {
        if (a.n_ != b.n_) {
            throw PreconditionError("polynomials live in rings with different variable counts");
        }
    }

    static Polynomial from_map(std::size_t n, const std::map<Monomial, Rational, CanonicalGreater>& acc) {
        Polynomial out(n);
        out.terms_.reserve(acc.size());
        for (const auto& [m, c] : acc) {
            if (c != 0) {
                out.terms_.push_back({m, c});
            }
        }
        return out;
    }

    static Polynomial combine(const Polynomial& a, const Polynomial& b, int sign) {
        check_same_ring(a, b);
        Polynomial out(a.n_);
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && canonical_greater(a.terms_[i].monomial, b.terms_[j].monomial))) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || canonical_greater(b.terms_[j].monomial, a.terms_[i].monomial)) {
                out.terms_.push_back({b.terms_[j].monomial, sign > 0 ? b.terms_[j].coeff : Rational(-b.terms_[j].coeff)});
                ++j;
            } else {
                Rational c = a.terms_[i].coeff;
                if (sign > 0) {
                    c += b.terms_[j].coeff;
                } else {
                    c -= b.terms_[j].coeff;
                }
                if (c != 0) {
                    out.terms_.push_back({a.terms_[i].monomial, std::move(c)});
                }
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::size_t n_;
    std::vector<Term> terms_;
};

/// Positive rational weights w_1..w_n, one per variable.
class WeightSystem {
public:
    explicit WeightSystem(std::vector<Rational> weights) : weights_(std::move(weights)) {
        if (weights_.empty() || weights_.size() > kMaxVariables) {
            throw PreconditionError("weight system needs between 1 and 4 weights");
        }
        Integer den = 1;
        for (const auto& w : weights_) {
            if (w <= 0) {
                throw PreconditionError("weights must be positive, got " + to_string(w));
            }
            sum_ += w;
            den = lcm_of(den, w.get_den());
        }
        scale_ = den;
        for (const auto& w : weights_) {
            Rational s = w * Rational(scale_);
            scaled_.push_back(s.get_num().get_si());
        }
    }

    static WeightSystem standard(std::size_t variable_count = 3) {
        return WeightSystem(std::vector<Rational>(variable_count, Rational(1)));
    }

    std::size_t size() const noexcept { return weights_.size(); }
    const Rational& operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<Rational>& weights() const noexcept { return weights_; }
    const Rational& weight_sum() const noexcept { return sum_; }

    bool is_standard() const {
        return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w == 1; });
    }

    /// Weights multiplied by the lcm of their denominators; all positive integers.
    const std::vector<long>& scaled() const noexcept { return scaled_; }
    const Integer& scale() const noexcept { return scale_; }

    Rational degree(const Monomial& m) const {
        long s = scaled_degree(m);
        return make_rational(Integer(s), scale_);
    }

    long scaled_degree(const Monomial& m) const noexcept {
        long s = 0;
        for (std::size_t i = 0; i < m.size() && i < scaled_.size(); ++i) {
            s += scaled_[i] * static_cast<long>(m[i]);
        }
        return s;
    }

    friend bool operator==(const WeightSystem& a, const WeightSystem& b) { return a.weights_ == b.weights_; }

private:
    std::vector<Rational> weights_;
    Rational sum_ = 0;
    Integer scale_ = 1;
    std::vector<long> scaled_;
};

using WeightedDegree = Rational;

inline void check_weights_match(const Polynomial& p, const WeightSystem& w) {
    if (p.variable_count() != w.size()) {
        throw PreconditionError("weight count differs from variable count");
    }
}

/// Weighted degree shared by every term of `p`, or nullopt when `p` is not weighted-homogeneous.
inline std::optional<WeightedDegree> wdeg(const Polynomial& p, const WeightSystem& w) {
    if (p.is_zero()) {
        throw PreconditionError("weighted degree of the zero polynomial");
    }
    check_weights_match(p, w);
    const long d = w.scaled_degree(p.terms().front().monomial);
    for (const auto& t : p.terms()) {
        if (w.scaled_degree(t.monomial) != d) {
            return std::nullopt;
        }
    }
    return make_rational(Integer(d), w.scale());
}

inline bool is_quasi_homogeneous(const Polynomial& p, const WeightSystem& w) { return wdeg(p, w).has_value(); }

inline Polynomial partial_derivative(const Polynomial& p, std::size_t index) {
    if (index >= p.variable_count()) {
        throw PreconditionError("derivative index out of range");
    }
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        const unsigned e = t.monomial[index];
        if (e == 0) {
            continue;
        }
        Monomial m = t.monomial;
        m.set(index, e - 1);
        out.push_back({m, t.coeff * Rational(e)});
    }
    return Polynomial::from_terms(p.variable_count(), out);
}

/// Weighted Euler derivation sum_i w_i x_i d_i applied to p.
inline Polynomial euler_apply(const Polynomial& p, const WeightSystem& w) {
    check_weights_match(p, w);
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        out.push_back({t.monomial, t.coeff * w.degree(t.monomial)});
    }
    return Polynomial::from_terms(p.variable_count(), out);
}

/// Monomials of weighted degree q (empty when q is not attained).
inline std::vector<Monomial> monomials_of_weighted_degree(const WeightSystem& w, const Rational& q) {
    std::vector<Monomial> out;
    const Rational scaled = q * Rational(w.scale());
    if (scaled < 0 || !is_integer(scaled)) {
        return out;
    }
    const long target = scaled.get_num().get_si();
    const std::size_t n = w.size();
    Monomial m(n);
    auto rec = [&](auto&& self, std::size_t i, long left) -> void {
        if (i + 1 == n) {
            if (left % w.scaled()[i] == 0) {
                m.set(i, static_cast<unsigned>(left / w.scaled()[i]));
                out.push_back(m);
            }
            return;
        }
        for (long e = left / w.scaled()[i]; e >= 0; --e) {
            m.set(i, static_cast<unsigned>(e));
            self(self, i + 1, left - e * w.scaled()[i]);
        }
    };
    rec(rec, 0, target);
    std::sort(out.begin(), out.end(), canonical_greater);
    return out;
}

/// Display name of variable `i` in a ring with `n` variables.
inline std::string variable_name(std::size_t i, std::size_t n) {
    if (n <= 3) {
        return std::string(1, "xyz"[i]);
    }
    return "x" + std::to_string(i + 1);
}

inline std::string to_string(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += variable_name(i, m.size());
        if (m[i] > 1) {
            out += '^' + std::to_string(m[i]);
        }
    }
    return out.empty() ? "1" : out;
}

/// Canonical text form; parses back to the same polynomial.
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool negative = t.coeff < 0;
        const Rational mag = abs(t.coeff);
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (t.monomial.is_one()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += to_string(t.monomial);
        } else {
            out += to_string(mag) + "*" + to_string(t.monomial);
        }
    }
    return out;
}

}  // namespace bs3

#endif  // BS3_POLYNOMIAL_HPP

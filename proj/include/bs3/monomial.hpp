#ifndef BS3_MONOMIAL_HPP
#define BS3_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>

#include "bs3/errors.hpp"

namespace bs3 {

/// Three ring variables plus one auxiliary variable for elimination tricks.
inline constexpr std::size_t kMaxVariables = 4;

/// Exponent vector x^u of a fixed length.
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;

    explicit Monomial(std::size_t variable_count) : n_(static_cast<std::uint8_t>(variable_count)) {
        if (variable_count > kMaxVariables) {
            throw PreconditionError("too many variables");
        }
    }

    Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
        std::size_t i = 0;
        for (unsigned e : exponents) {
            exps_[i++] = static_cast<Exponent>(e);
        }
    }

    std::size_t size() const noexcept { return n_; }
    unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
    void set(std::size_t i, unsigned e) noexcept { exps_[i] = static_cast<Exponent>(e); }

    unsigned total_degree() const noexcept {
        unsigned d = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            d += exps_[i];
        }
        return d;
    }

    bool is_one() const noexcept { return total_degree() == 0; }

    /// True when this monomial divides `other`.
    bool divides(const Monomial& other) const noexcept {
        for (std::size_t i = 0; i < n_; ++i) {
            if (exps_[i] > other.exps_[i]) {
                return false;
            }
        }
        return true;
    }

    bool coprime_with(const Monomial& other) const noexcept {
        for (std::size_t i = 0; i < n_; ++i) {
            if (exps_[i] != 0 && other.exps_[i] != 0) {
                return false;
            }
        }
        return true;
    }

    /// this / divisor; caller guarantees divisibility.
    Monomial divided_by(const Monomial& divisor) const noexcept {
        Monomial out(*this);
        for (std::size_t i = 0; i < n_; ++i) {
            out.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
        }
        return out;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
        Monomial out(a);
        for (std::size_t i = 0; i < a.n_; ++i) {
            out.exps_[i] = static_cast<Exponent>(a.exps_[i] + b.exps_[i]);
        }
        return out;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
        Monomial out(a);
        for (std::size_t i = 0; i < a.n_; ++i) {
            out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        }
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.n_ == b.n_ && a.exps_ == b.exps_;
    }

    std::size_t hash() const noexcept {
        std::size_t h = n_;
        for (std::size_t i = 0; i < n_; ++i) {
            h = h * 131 + exps_[i];
        }
        return h;
    }

private:
    std::array<Exponent, kMaxVariables> exps_{};
    std::uint8_t n_ = 0;
};

/// Graded reverse lexicographic comparison by total degree: true when a > b.
/// This is the canonical display order of polynomials.
inline bool canonical_greater(const Monomial& a, const Monomial& b) noexcept {
    const unsigned da = a.total_degree();
    const unsigned db = b.total_degree();
    if (da != db) {
        return da > db;
    }
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) {
            return a[i] < b[i];
        }
    }
    return false;
}

struct CanonicalGreater {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return canonical_greater(a, b); }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// All monomials in `variable_count` variables of total degree `degree`.
inline void for_each_monomial_of_degree(std::size_t variable_count, unsigned degree,
                                        const std::function<void(const Monomial&)>& visit) {
    Monomial m(variable_count);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == variable_count) {
            m.set(i, left);
            visit(m);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            m.set(i, e);
            rec(i + 1, left - e);
        }
    };
    if (variable_count == 0) {
        if (degree == 0) {
            visit(m);
        }
        return;
    }
    rec(0, degree);
}

}  // namespace bs3

#endif  // BS3_MONOMIAL_HPP

// Random inputs and brute-force oracles used by several test files.
#ifndef BS3_TESTS_SUPPORT_HPP
#define BS3_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "bs3/graded.hpp"
#include "bs3/linalg.hpp"
#include "bs3/polynomial.hpp"

namespace support {

/// Random combination of the monomials of weighted degree q, small integer coefficients.
inline bs3::Polynomial random_quasi_homogeneous(std::mt19937& rng, const bs3::WeightSystem& w, const bs3::Rational& q,
                                                int density_percent = 60) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> pct(0, 99);
    bs3::Polynomial p(w.size());
    for (const auto& m : bs3::monomials_of_weighted_degree(w, q)) {
        if (pct(rng) < density_percent) {
            p += bs3::Polynomial::term(m, coeff(rng));
        }
    }
    return p;
}

/// Nonzero homogeneous polynomial of total degree `degree` in 3 variables.
inline bs3::Polynomial random_homogeneous(std::mt19937& rng, unsigned degree) {
    const auto w = bs3::WeightSystem::standard();
    for (;;) {
        auto p = random_quasi_homogeneous(rng, w, degree, 40);
        if (!p.is_zero()) {
            return p;
        }
    }
}

/// Plain Gauss-Jordan rank over Q, no fraction-free tricks.
inline std::size_t naive_rank(std::vector<bs3::RationalVector> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i][c] != 0) {
                const bs3::Rational f = rows[i][c] / rows[r][c];
                for (std::size_t k = c; k < cols; ++k) {
                    rows[i][k] -= f * rows[r][k];
                }
            }
        }
        ++r;
    }
    return r;
}

/// Coefficient vectors of all m * g with deg(m) + deg(g) = q, over the degree-q monomial basis.
inline std::vector<bs3::RationalVector> multiples_in_degree(const std::vector<bs3::Polynomial>& gens, unsigned q) {
    std::vector<bs3::Monomial> basis;
    bs3::for_each_monomial_of_degree(3, q, [&](const bs3::Monomial& m) { basis.push_back(m); });
    std::vector<bs3::RationalVector> rows;
    for (const auto& g : gens) {
        const unsigned dg = g.total_degree();
        if (dg > q) {
            continue;
        }
        bs3::for_each_monomial_of_degree(3, q - dg, [&](const bs3::Monomial& m) {
            const auto prod = bs3::Polynomial::term(m, 1) * g;
            bs3::RationalVector row(basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i) {
                row[i] = prod.coefficient(basis[i]);
            }
            rows.push_back(std::move(row));
        });
    }
    return rows;
}

/// Membership of a homogeneous p in a homogeneous ideal by linear algebra in degree deg(p).
inline bool member_by_linear_algebra(const std::vector<bs3::Polynomial>& gens, const bs3::Polynomial& p) {
    if (p.is_zero()) {
        return true;
    }
    const unsigned q = p.total_degree();
    auto rows = multiples_in_degree(gens, q);
    const std::size_t before = naive_rank(rows);
    std::vector<bs3::Monomial> basis;
    bs3::for_each_monomial_of_degree(3, q, [&](const bs3::Monomial& m) { basis.push_back(m); });
    bs3::RationalVector row(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        row[i] = p.coefficient(basis[i]);
    }
    rows.push_back(row);
    return naive_rank(rows) == before;
}

}  // namespace support

#endif  // BS3_TESTS_SUPPORT_HPP

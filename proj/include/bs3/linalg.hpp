#ifndef BS3_LINALG_HPP
#define BS3_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "bs3/errors.hpp"
#include "bs3/rational.hpp"

namespace bs3 {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    /// Rows given as vectors; all must share one length.
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows) {
        if (rows.empty()) {
            return {};
        }
        RationalMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) {
                throw PreconditionError("ragged rows");
            }
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                t(c, r) = (*this)(r, c);
            }
        }
        return t;
    }

    RationalVector row(std::size_t r) const {
        return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

namespace detail {

using IntegerRow = std::vector<Integer>;

inline void make_primitive(IntegerRow& row) {
    Integer g = 0;
    for (const auto& v : row) {
        if (v != 0) {
            g = gcd_of(g, v);
            if (g == 1) {
                return;
            }
        }
    }
    if (g > 1) {
        for (auto& v : row) {
            if (v != 0) {
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
            }
        }
    }
}

/// Rank of an integer matrix by fraction-free elimination. Each combination
/// row_i <- a*row_i - b*row_p is followed by removal of the row content, which
/// keeps entries small and leaves rows without a pivot entry untouched.
inline std::size_t integer_rank(std::vector<IntegerRow> rows, std::size_t cols) {
    std::size_t rank = 0;
    std::vector<bool> used(rows.size(), false);
    auto nonzeros = [](const IntegerRow& r) {
        return static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [](const Integer& v) { return v != 0; }));
    };
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rows.size();
        std::size_t best = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i][c] == 0) {
                continue;
            }
            const std::size_t nz = nonzeros(rows[i]);
            if (pivot == rows.size() || nz < best) {
                pivot = i;
                best = nz;
            }
        }
        if (pivot == rows.size()) {
            continue;
        }
        used[pivot] = true;
        ++rank;
        const IntegerRow& p = rows[pivot];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i][c] == 0) {
                continue;
            }
            const Integer g = gcd_of(p[c], rows[i][c]);
            const Integer a = p[c] / g;
            const Integer b = rows[i][c] / g;
            IntegerRow& r = rows[i];
            for (std::size_t j = c; j < cols; ++j) {
                if (p[j] == 0) {
                    if (r[j] != 0) {
                        r[j] *= a;
                    }
                } else {
                    r[j] = a * r[j] - b * p[j];
                }
            }
            make_primitive(r);
        }
    }
    return rank;
}

inline std::vector<IntegerRow> to_integer_rows(const RationalMatrix& m) {
    std::vector<IntegerRow> rows(m.rows(), IntegerRow(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer den = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            den = lcm_of(den, m(r, c).get_den());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational v = m(r, c) * Rational(den);
            rows[r][c] = v.get_num();
        }
        make_primitive(rows[r]);
    }
    return rows;
}

}  // namespace detail

/// Rank over Q. Rows are scaled to primitive integer vectors first (rank-preserving).
inline std::size_t rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    // Eliminating along the shorter side keeps the working set small.
    if (m.rows() > m.cols()) {
        return detail::integer_rank(detail::to_integer_rows(m.transpose()), m.rows());
    }
    return detail::integer_rank(detail::to_integer_rows(m), m.cols());
}

inline std::size_t kernel_dimension(const RationalMatrix& m) { return m.cols() - rank(m); }

/// Dimension of the Q-span of equal-length vectors.
inline std::size_t span_dimension(const std::vector<RationalVector>& vectors) {
    if (vectors.empty()) {
        return 0;
    }
    return rank(RationalMatrix::from_rows(vectors));
}

/// Basis of the right kernel {v : m v = 0}, from the reduced row echelon form.
inline std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    RationalMatrix a = m;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) {
            ++p;
        }
        if (p == a.rows()) {
            continue;
        }
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::swap(a(p, j), a(r, j));
        }
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            a(r, j) *= inv;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) {
                continue;
            }
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) {
                a(i, j) -= f * a(r, j);
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) {
            continue;
        }
        RationalVector v(a.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            v[pivot_cols[i]] = -a(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace bs3

#endif  // BS3_LINALG_HPP

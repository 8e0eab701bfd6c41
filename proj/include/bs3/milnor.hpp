#ifndef BS3_MILNOR_HPP
#define BS3_MILNOR_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "bs3/errors.hpp"
#include "bs3/graded.hpp"
#include "bs3/groebner.hpp"
#include "bs3/linalg.hpp"
#include "bs3/polynomial.hpp"

namespace bs3 {

/// (d_1 f, ..., d_n f) with zero partials dropped.
inline Ideal jacobian_ideal(const Polynomial& f) {
    if (f.is_constant()) {
        throw PreconditionError("Jacobian ideal of a constant polynomial");
    }
    std::vector<Polynomial> partials;
    for (std::size_t i = 0; i < f.variable_count(); ++i) {
        partials.push_back(partial_derivative(f, i));
    }
    return Ideal(std::move(partials), f.variable_count());
}

/// Graded data of the Milnor algebra R/(df) and of its H0_m.
struct MilnorProfile {
    Polynomial f;
    WeightSystem weights;
    WeightedDegree wdeg_f;
    Ideal jacobian;
    DegreeData h0;
    bool is_isolated = false;
    /// Hilbert function of R/(df); present only when it is finite-dimensional.
    std::optional<DegreeData> milnor_algebra_degrees;
};

namespace detail {

/// Zero-dimensionality test: every variable has a pure power among the leading monomials.
inline bool has_pure_powers(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.variable_count(); ++i) {
        bool found = false;
        for (const auto& m : gb.leading_monomials()) {
            if (m[i] > 0 && m.total_degree() == m[i]) {
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

/// Hilbert function of an Artinian quotient, read off its standard monomials.
inline DegreeData artinian_hilbert_function(const GroebnerBasis& gb, const WeightSystem& w) {
    const std::size_t n = gb.variable_count();
    std::vector<unsigned> bound(n, 0);
    for (const auto& m : gb.leading_monomials()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] > 0 && m.total_degree() == m[i]) {
                bound[i] = bound[i] == 0 ? m[i] : std::min(bound[i], m[i]);
            }
        }
    }
    std::map<WeightedDegree, std::size_t> counts;
    Monomial m(n);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (gb.is_standard(m)) {
                ++counts[w.degree(m)];
            }
            return;
        }
        for (unsigned e = 0; e < bound[i]; ++e) {
            m.set(i, e);
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    DegreeData out;
    for (const auto& [q, c] : counts) {
        out.set(q, c);
    }
    return out;
}

}  // namespace detail

inline MilnorProfile milnor_profile(const Polynomial& f, const WeightSystem& w, const Limits& limits = {}) {
    check_weights_match(f, w);
    if (f.is_constant()) {
        throw PreconditionError("constant polynomial has no Milnor algebra");
    }
    const auto d = wdeg(f, w);
    if (!d) {
        throw PreconditionError("polynomial is not quasi-homogeneous for the given weights");
    }
    MilnorProfile profile{f, w, *d, jacobian_ideal(f), {}, false, std::nullopt};
    const GroebnerBasis gb = buchberger(profile.jacobian, weighted_grevlex(w), limits);
    profile.is_isolated = detail::has_pure_powers(gb);
    if (profile.is_isolated) {
        profile.milnor_algebra_degrees = detail::artinian_hilbert_function(gb, w);
    }
    profile.h0 = h0_degree_data(profile.jacobian, w, limits);
    return profile;
}

/// dim of logarithmic derivations killing f in degree k (d_i has weight -w_i):
/// the kernel of (a_1..a_n) -> sum a_i d_i f on the sum of R_{k + w_i}.
inline std::size_t der_log0_graded_dimension(const Polynomial& f, const WeightSystem& w, const WeightedDegree& k) {
    check_weights_match(f, w);
    const auto d = wdeg(f, w);
    if (!d) {
        throw PreconditionError("polynomial is not quasi-homogeneous for the given weights");
    }
    const std::vector<Monomial> target = monomials_of_weighted_degree(w, k + *d);
    std::map<Monomial, std::size_t, CanonicalGreater> index;
    for (std::size_t i = 0; i < target.size(); ++i) {
        index[target[i]] = i;
    }
    std::vector<RationalVector> columns;
    for (std::size_t i = 0; i < f.variable_count(); ++i) {
        const Polynomial partial = partial_derivative(f, i);
        for (const auto& m : monomials_of_weighted_degree(w, k + w[i])) {
            RationalVector col(target.size());
            for (const auto& t : partial.terms()) {
                col[index.at(t.monomial * m)] = t.coeff;
            }
            columns.push_back(std::move(col));
        }
    }
    if (columns.empty()) {
        return 0;
    }
    return columns.size() - span_dimension(columns);
}

}  // namespace bs3

#endif  // BS3_MILNOR_HPP

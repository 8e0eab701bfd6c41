#ifndef BS3_GRADED_HPP
#define BS3_GRADED_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bs3/errors.hpp"
#include "bs3/groebner.hpp"
#include "bs3/linalg.hpp"
#include "bs3/polynomial.hpp"

namespace bs3 {

/// Finite map from weighted degree to a positive dimension.
class DegreeData {
public:
    void set(const WeightedDegree& q, std::size_t dim) {
        if (dim == 0) {
            entries_.erase(q);
        } else {
            entries_[q] = dim;
        }
    }

    std::size_t at(const WeightedDegree& q) const {
        const auto it = entries_.find(q);
        return it == entries_.end() ? 0 : it->second;
    }

    bool empty() const noexcept { return entries_.empty(); }
    bool contains(const WeightedDegree& q) const { return entries_.count(q) != 0; }
    const std::map<WeightedDegree, std::size_t>& entries() const noexcept { return entries_; }

    std::vector<WeightedDegree> support() const {
        std::vector<WeightedDegree> out;
        for (const auto& [q, d] : entries_) {
            out.push_back(q);
        }
        return out;
    }

    std::optional<WeightedDegree> min_degree() const {
        return entries_.empty() ? std::nullopt : std::optional<WeightedDegree>(entries_.begin()->first);
    }
    std::optional<WeightedDegree> max_degree() const {
        return entries_.empty() ? std::nullopt : std::optional<WeightedDegree>(entries_.rbegin()->first);
    }

    std::size_t total_dimension() const {
        std::size_t s = 0;
        for (const auto& [q, d] : entries_) {
            s += d;
        }
        return s;
    }

    friend bool operator==(const DegreeData& a, const DegreeData& b) { return a.entries_ == b.entries_; }

private:
    std::map<WeightedDegree, std::size_t> entries_;
};

inline std::string to_string(const DegreeData& data) {
    std::string out = "{";
    bool first = true;
    for (const auto& [q, d] : data.entries()) {
        out += (first ? "" : ", ") + to_string(q) + ":" + std::to_string(d);
        first = false;
    }
    return out + "}";
}

struct RegularityReport {
    std::optional<WeightedDegree> h0_max;
    std::optional<long> h1_max;
    long regularity = 0;
    std::size_t sheaf_dim_e = 0;
};

inline MonomialOrder weighted_grevlex(const WeightSystem& w) { return MonomialOrder::grevlex(w.size(), w.scaled()); }

/// dim (R/I)_q by linear algebra: monomials of degree q minus the rank of all
/// generator multiples landing in degree q.
inline std::size_t graded_dimension(const Ideal& ideal, const WeightSystem& w, const WeightedDegree& q) {
    detail::require_homogeneous(ideal, w);
    const std::vector<Monomial> basis = monomials_of_weighted_degree(w, q);
    if (basis.empty()) {
        return 0;
    }
    std::map<Monomial, std::size_t, CanonicalGreater> index;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        index[basis[i]] = i;
    }
    std::vector<RationalVector> columns;
    for (const auto& g : ideal.generators()) {
        const WeightedDegree dg = *wdeg(g, w);
        for (const auto& m : monomials_of_weighted_degree(w, q - dg)) {
            RationalVector col(basis.size());
            for (const auto& t : g.terms()) {
                col[index.at(t.monomial * m)] = t.coeff;
            }
            columns.push_back(std::move(col));
        }
    }
    return basis.size() - span_dimension(columns);
}

/// dim (R/I)_q as the number of standard monomials of degree q; valid for any
/// order because I is weighted-homogeneous.
inline std::size_t graded_dimension(const GroebnerBasis& basis, const WeightSystem& w, const WeightedDegree& q) {
    std::size_t count = 0;
    for (const auto& m : monomials_of_weighted_degree(w, q)) {
        count += basis.is_standard(m) ? 1 : 0;
    }
    return count;
}

namespace detail {

inline long max_scaled_weight(const WeightSystem& w) { return *std::max_element(w.scaled().begin(), w.scaled().end()); }

inline WeightedDegree from_scaled(long s, const WeightSystem& w) { return make_rational(Integer(s), w.scale()); }

/// Largest weighted degree of a basis element, in scaled units.
inline long max_scaled_degree(const GroebnerBasis& basis, const WeightSystem& w) {
    long top = 0;
    for (const auto& g : basis.elements()) {
        top = std::max(top, w.scaled_degree(g.terms().front().monomial));
    }
    return top;
}

/// First scaled degree q0 >= start such that dim(R/I)_q = dim(R/J)_q on every
/// degree in [q0, q0 + max weight). Given J's generators live in degrees <= start,
/// I and J then agree in every degree >= q0.
inline long agreement_start(const GroebnerBasis& gi, const GroebnerBasis& gj, const WeightSystem& w, long start) {
    const long window = max_scaled_weight(w);
    const long limit = start + 400 * window;
    long run = 0;
    for (long q = start; q < limit; ++q) {
        const WeightedDegree d = from_scaled(q, w);
        if (graded_dimension(gi, w, d) == graded_dimension(gj, w, d)) {
            if (++run == window) {
                return q - window + 1;
            }
        } else {
            run = 0;
        }
    }
    throw PreconditionError("local cohomology H0 did not vanish within the search window; is it finite-dimensional?");
}

}  // namespace detail

/// Degree data of H0_m(R/I) = (I : m^inf)/I, for weighted-homogeneous I.
inline DegreeData h0_degree_data(const Ideal& ideal, const WeightSystem& w, const Limits& limits = {}) {
    detail::require_homogeneous(ideal, w);
    const MonomialOrder order = weighted_grevlex(w);
    const GroebnerBasis gi = buchberger(ideal, order, limits);
    const GroebnerBasis gs = buchberger(saturate_irrelevant(ideal, w, limits), order, limits);
    DegreeData out;
    const long stop = detail::agreement_start(gi, gs, w, detail::max_scaled_degree(gs, w));
    for (long q = 0; q < stop; ++q) {
        const WeightedDegree d = detail::from_scaled(q, w);
        const std::size_t a = graded_dimension(gi, w, d);
        const std::size_t b = graded_dimension(gs, w, d);
        if (a < b) {
            throw InconsistencyError("saturation is smaller than the ideal in degree " + to_string(d));
        }
        out.set(d, a - b);
    }
    return out;
}

namespace detail {

inline unsigned max_generator_degree(const Ideal& ideal) {
    unsigned top = 0;
    for (const auto& g : ideal.generators()) {
        top = std::max(top, g.total_degree());
    }
    return top;
}

inline void require_standard_ring(const Ideal& ideal) {
    if (ideal.variable_count() != 3) {
        throw PreconditionError("sheaf dimensions are defined for ideals in three variables");
    }
    for (const auto& g : ideal.generators()) {
        if (!is_quasi_homogeneous(g, WeightSystem::standard())) {
            throw PreconditionError("ideal is not homogeneous: " + to_string(g));
        }
    }
}

struct SaturatedHilbert {
    GroebnerBasis saturated;
    std::size_t e;
    long window_start;
};

inline SaturatedHilbert saturated_hilbert(const Ideal& ideal, const Limits& limits) {
    require_standard_ring(ideal);
    const WeightSystem w = WeightSystem::standard();
    GroebnerBasis gs = buchberger(saturate_irrelevant(ideal, w, limits), weighted_grevlex(w), limits);
    const long start = 3 * static_cast<long>(max_generator_degree(ideal));
    const std::size_t e = graded_dimension(gs, w, start);
    if (ideal.is_zero() || graded_dimension(gs, w, start + 1) != e || graded_dimension(gs, w, start + 2) != e) {
        throw PreconditionError(
            "Hilbert function of the saturation is not constant; the projective scheme is not zero-dimensional");
    }
    return {std::move(gs), e, start};
}

}  // namespace detail

/// Stabilized dim (R/I^sat)_q, the length of the zero-dimensional projective
/// scheme of I; equals dim Gamma(P^2, sheafified R/I (q)) for every twist q.
inline std::size_t sheaf_dimension_e(const Ideal& ideal, const Limits& limits = {}) {
    return detail::saturated_hilbert(ideal, limits).e;
}

/// dim [H1_m(R/I)]_q = e - dim (R/I^sat)_q.
inline std::size_t h1_dimension(const Ideal& ideal, long q, const Limits& limits = {}) {
    const auto sh = detail::saturated_hilbert(ideal, limits);
    const std::size_t s = q < 0 ? 0 : graded_dimension(sh.saturated, WeightSystem::standard(), q);
    if (s > sh.e) {
        throw InconsistencyError("saturated Hilbert function exceeds its stable value");
    }
    return sh.e - s;
}

/// Castelnuovo-Mumford regularity of R/I for homogeneous I with dim R/I <= 1.
inline RegularityReport regularity_report(const Ideal& ideal, const Limits& limits = {}) {
    const auto sh = detail::saturated_hilbert(ideal, limits);
    const WeightSystem w = WeightSystem::standard();
    if (sh.saturated.is_unit() && buchberger(ideal, weighted_grevlex(w), limits).is_unit()) {
        throw PreconditionError("regularity of the zero module is undefined");
    }
    RegularityReport report;
    report.sheaf_dim_e = sh.e;
    report.h0_max = h0_degree_data(ideal, w, limits).max_degree();
    if (sh.e > 0) {
        long top = -1;
        for (long q = 0; q <= sh.window_start + 2; ++q) {
            if (graded_dimension(sh.saturated, w, q) < sh.e) {
                top = q;
            }
        }
        report.h1_max = top;
    }
    std::optional<long> reg;
    if (report.h0_max) {
        reg = floor_of(*report.h0_max).get_si();
    }
    if (report.h1_max) {
        reg = std::max(reg.value_or(*report.h1_max + 1), *report.h1_max + 1);
    }
    report.regularity = reg.value_or(0);
    return report;
}

}  // namespace bs3

#endif  // BS3_GRADED_HPP

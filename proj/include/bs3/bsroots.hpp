#ifndef BS3_BSROOTS_HPP
#define BS3_BSROOTS_HPP

#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bs3/errors.hpp"
#include "bs3/milnor.hpp"
#include "bs3/rational.hpp"

namespace bs3 {

/// Finite set of rationals, always iterated in ascending order. No multiplicities.
class RootSet {
public:
    RootSet() = default;
    RootSet(std::initializer_list<Rational> roots) : roots_(roots) {}
    explicit RootSet(std::set<Rational> roots) : roots_(std::move(roots)) {}

    void insert(const Rational& r) { roots_.insert(r); }
    bool contains(const Rational& r) const { return roots_.count(r) != 0; }
    bool empty() const noexcept { return roots_.empty(); }
    std::size_t size() const noexcept { return roots_.size(); }
    auto begin() const { return roots_.begin(); }
    auto end() const { return roots_.end(); }
    std::vector<Rational> sorted() const { return {roots_.begin(), roots_.end()}; }

    RootSet filter(const std::function<bool(const Rational&)>& keep) const {
        RootSet out;
        for (const auto& r : roots_) {
            if (keep(r)) {
                out.insert(r);
            }
        }
        return out;
    }

    bool is_subset_of(const RootSet& other) const {
        for (const auto& r : roots_) {
            if (!other.contains(r)) {
                return false;
            }
        }
        return true;
    }

    friend RootSet operator|(RootSet a, const RootSet& b) {
        a.roots_.insert(b.roots_.begin(), b.roots_.end());
        return a;
    }
    friend RootSet operator&(const RootSet& a, const RootSet& b) {
        return a.filter([&](const Rational& r) { return b.contains(r); });
    }
    friend RootSet operator-(const RootSet& a, const RootSet& b) {
        return a.filter([&](const Rational& r) { return !b.contains(r); });
    }
    friend bool operator==(const RootSet& a, const RootSet& b) { return a.roots_ == b.roots_; }

private:
    std::set<Rational> roots_;
};

inline std::string to_string(const RootSet& roots) {
    std::string out = "{";
    bool first = true;
    for (const auto& r : roots) {
        out += (first ? "" : ", ") + to_string(r);
        first = false;
    }
    return out + "}";
}

/// Interval helpers; "open"/"closed" refer to the left and right ends.
inline bool in_open_closed(const Rational& r, const Rational& lo, const Rational& hi) { return r > lo && r <= hi; }
inline bool in_open_open(const Rational& r, const Rational& lo, const Rational& hi) { return r > lo && r < hi; }
inline bool in_closed_open(const Rational& r, const Rational& lo, const Rational& hi) { return r >= lo && r < hi; }

/// Involution about -1.
inline Rational sigma(const Rational& a) { return Rational(-2) - a; }

inline RootSet sigma(const RootSet& roots) {
    RootSet out;
    for (const auto& r : roots) {
        out.insert(sigma(r));
    }
    return out;
}

namespace detail {

inline RootSet shifted_h0_roots(const MilnorProfile& profile, const DegreeData& data, const Rational& offset) {
    RootSet out;
    const Rational& d = profile.wdeg_f;
    const Rational& sum = profile.weights.weight_sum();
    for (const auto& [t, dim] : data.entries()) {
        out.insert((-(t + sum) + offset) / d);
    }
    return out;
}

}  // namespace detail

/// Zero set for an isolated quasi-homogeneous singularity:
/// {-(t + sum w)/wdeg f : (R/(df))_t != 0} together with -1.
inline RootSet roots_isolated(const MilnorProfile& profile) {
    if (!profile.is_isolated || !profile.milnor_algebra_degrees) {
        throw PreconditionError("singularity is not isolated; the closed formula does not apply");
    }
    RootSet out = detail::shifted_h0_roots(profile, *profile.milnor_algebra_degrees, 0);
    out.insert(-1);
    return out;
}

/// {-(t + sum w)/wdeg f : t a degree of H0_m(R/(df))}; these are always Bernstein-Sato roots.
inline RootSet new_roots(const MilnorProfile& profile) { return detail::shifted_h0_roots(profile, profile.h0, 0); }

/// Zeros of the b-function of the H0-controlled module: {(-t + 2 wdeg f - sum w)/wdeg f}.
/// Empty when H0 vanishes (the b-function is 1).
inline RootSet blf_roots(const MilnorProfile& profile) {
    return detail::shifted_h0_roots(profile, profile.h0, 2 * profile.wdeg_f);
}

struct SymmetryReport {
    RootSet xi_set;
    /// Pairs (a, -2 - a) with both members present, listed once with a >= -1.
    std::vector<std::pair<Rational, Rational>> sigma_pairs;
    /// Roots outside Xi whose mirror image is not a root outside Xi.
    RootSet asymmetric_outside_xi;
};

/// The set outside of which the zero set is symmetric about -1.
inline SymmetryReport xi_set(const MilnorProfile& profile) {
    SymmetryReport report;
    report.xi_set = detail::shifted_h0_roots(profile, profile.h0, 0) |
                    detail::shifted_h0_roots(profile, profile.h0, profile.wdeg_f);
    return report;
}

inline SymmetryReport check_partial_symmetry(const RootSet& zeros, const RootSet& xi) {
    SymmetryReport report;
    report.xi_set = xi;
    const RootSet outside = zeros - xi;
    for (const auto& a : zeros) {
        if (a >= -1 && zeros.contains(sigma(a))) {
            report.sigma_pairs.emplace_back(a, sigma(a));
        }
    }
    report.asymmetric_outside_xi = outside.filter([&](const Rational& a) { return !outside.contains(sigma(a)); });
    return report;
}

/// Bernstein-Sato roots in (-3, -2]; these all come from H0 degrees.
inline RootSet small_roots(const MilnorProfile& profile) {
    return new_roots(profile).filter([](const Rational& r) { return in_open_closed(r, -3, -2); });
}

/// Twisted logarithmic comparison for lambda <= 0:
/// holds iff -(lambda - 2) wdeg f - sum w is not a degree of H0_m(R/(df)).
inline bool tlct_holds(const MilnorProfile& profile, const Rational& lambda) {
    if (lambda > 0) {
        throw PreconditionError("twisted comparison criterion needs lambda <= 0, got " + to_string(lambda));
    }
    const Rational value = -(lambda - 2) * profile.wdeg_f - profile.weights.weight_sum();
    return !profile.h0.contains(value);
}

struct HomogeneousTaxonomy {
    long tau = 0;
    RootSet upsilon;
    RootSet window_small;
    struct DeterminedBy {
        long tau = 0;
        long degree = 0;
        RootSet supplied_interval_roots;
    } determined_by;
    RootSet reconstruction;
};

/// Zero set assembled from the guaranteed roots and the roots in [-1, 0):
/// upsilon, the supplied [-1,0) roots, and the mirror images of those in (-1, 0).
inline RootSet reconstruct_zero_set(const RootSet& upsilon, const RootSet& interval_roots) {
    const RootSet small = upsilon.filter([](const Rational& r) { return in_open_closed(r, -3, -2); });
    const RootSet middle = upsilon.filter([](const Rational& r) { return in_open_open(r, -2, -1); }) |
                           sigma(interval_roots.filter([](const Rational& r) { return in_open_open(r, -1, 0); }));
    const RootSet top = interval_roots | upsilon.filter([](const Rational& r) { return in_closed_open(r, -1, 0); });
    return small | middle | top;
}

/// (1/d) * (Z cap [-3d + tau + 3, -(tau + 3)]).
inline RootSet upsilon_set(long tau, long degree) {
    RootSet out;
    for (long k = -3 * degree + tau + 3; k <= -(tau + 3); ++k) {
        out.insert(make_rational(k, degree));
    }
    return out;
}

inline HomogeneousTaxonomy homogeneous_taxonomy(const MilnorProfile& profile, const RootSet& interval_roots) {
    if (!profile.weights.is_standard()) {
        throw PreconditionError("taxonomy needs a homogeneous polynomial (standard weights)");
    }
    const auto tau = profile.h0.min_degree();
    if (!tau) {
        throw PreconditionError("H0 of the Milnor algebra is zero; tau is undefined");
    }
    for (const auto& r : interval_roots) {
        if (!in_closed_open(r, -1, 0)) {
            throw PreconditionError("supplied interval root " + to_string(r) + " is outside [-1, 0)");
        }
    }
    HomogeneousTaxonomy out;
    out.tau = floor_of(*tau).get_si();
    const long d = floor_of(profile.wdeg_f).get_si();
    out.upsilon = upsilon_set(out.tau, d);
    out.window_small = out.upsilon.filter([](const Rational& r) { return in_open_closed(r, -3, -2); });
    out.determined_by = {out.tau, d, interval_roots - out.upsilon};
    out.reconstruction = reconstruct_zero_set(out.upsilon, interval_roots);
    return out;
}

}  // namespace bs3

#endif  // BS3_BSROOTS_HPP

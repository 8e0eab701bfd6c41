#ifndef BS3_ARRANGEMENT_HPP
#define BS3_ARRANGEMENT_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bs3/bsroots.hpp"
#include "bs3/errors.hpp"
#include "bs3/graded.hpp"
#include "bs3/linalg.hpp"
#include "bs3/milnor.hpp"
#include "bs3/parse.hpp"

namespace bs3 {

/// Central linear form a*x + b*y + c*z, scaled so the first nonzero coefficient is 1.
class LinearForm {
public:
    LinearForm(Rational a, Rational b, Rational c) : coeffs_{std::move(a), std::move(b), std::move(c)} {
        const auto lead = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& v) { return v != 0; });
        if (lead == coeffs_.end()) {
            throw PreconditionError("linear form is zero");
        }
        const Rational s = *lead;
        for (auto& v : coeffs_) {
            v /= s;
        }
    }

    static LinearForm from_polynomial(const Polynomial& p) {
        if (p.variable_count() != 3 || p.is_zero()) {
            throw PreconditionError("expected a nonzero linear form in x, y, z");
        }
        std::array<Rational, 3> c;
        for (const auto& t : p.terms()) {
            if (t.monomial.total_degree() != 1) {
                throw PreconditionError("not a central linear form: " + to_string(p));
            }
            for (std::size_t i = 0; i < 3; ++i) {
                if (t.monomial[i] == 1) {
                    c[i] = t.coeff;
                }
            }
        }
        return LinearForm(c[0], c[1], c[2]);
    }

    const std::array<Rational, 3>& coefficients() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    Polynomial polynomial() const {
        Polynomial p(3);
        for (std::size_t i = 0; i < 3; ++i) {
            p += coeffs_[i] * Polynomial::variable(i);
        }
        return p;
    }

    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::array<Rational, 3> coeffs_;
};

/// Parses "x,y,z,x+y+z" style comma-separated central linear forms.
inline std::vector<LinearForm> parse_forms(std::string_view csv) {
    std::vector<LinearForm> forms;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = csv.find(',', start);
        const std::string_view part = csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start);
        try {
            forms.push_back(LinearForm::from_polynomial(parse_polynomial(part)));
        } catch (const ParseError& e) {
            throw ParseError(e.detail(), start + e.position());
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return forms;
}

inline std::string to_string(const LinearForm& form) { return to_string(form.polynomial()); }

/// Reduced, central, essential, indecomposable line arrangement in P^2.
class Arrangement {
public:
    const std::vector<LinearForm>& forms() const noexcept { return forms_; }
    std::size_t degree() const noexcept { return forms_.size(); }

    /// The defining polynomial: product of the forms.
    Polynomial polynomial() const {
        Polynomial f = Polynomial::constant(1);
        for (const auto& l : forms_) {
            f *= l.polynomial();
        }
        return f;
    }

private:
    friend Arrangement validate(std::vector<LinearForm> forms);
    explicit Arrangement(std::vector<LinearForm> forms) : forms_(std::move(forms)) {}
    std::vector<LinearForm> forms_;
};

namespace detail {

inline std::size_t normal_rank(const std::vector<LinearForm>& forms) {
    std::vector<RationalVector> rows;
    for (const auto& l : forms) {
        rows.emplace_back(l.coefficients().begin(), l.coefficients().end());
    }
    return span_dimension(rows);
}

}  // namespace detail

/// False iff some split of the normals into two nonempty blocks has ranks adding
/// up to 3, i.e. the polynomial factors into pieces in disjoint variables after
/// a linear change of coordinates.
inline bool is_indecomposable(const std::vector<LinearForm>& forms) {
    const std::size_t d = forms.size();
    const std::size_t total = detail::normal_rank(forms);
    if (d < 2) {
        return true;
    }
    // The last form always sits in the second block, so each split is seen once.
    for (unsigned long mask = 1; mask < (1UL << (d - 1)); ++mask) {
        std::vector<LinearForm> first;
        std::vector<LinearForm> second;
        for (std::size_t i = 0; i < d; ++i) {
            ((mask >> i) & 1UL ? first : second).push_back(forms[i]);
        }
        if (detail::normal_rank(first) + detail::normal_rank(second) == total) {
            return false;
        }
    }
    return true;
}

inline Arrangement validate(std::vector<LinearForm> forms) {
    if (forms.size() < 3) {
        throw PreconditionError("an arrangement needs at least 3 forms");
    }
    if (forms.size() > 20) {
        throw PreconditionError("arrangements with more than 20 forms are not supported");
    }
    for (std::size_t i = 0; i < forms.size(); ++i) {
        for (std::size_t j = i + 1; j < forms.size(); ++j) {
            if (forms[i] == forms[j]) {
                throw PreconditionError("not reduced: form " + to_string(forms[i]) + " appears twice");
            }
        }
    }
    if (detail::normal_rank(forms) < 3) {
        throw PreconditionError("not essential: the normals span a space of rank < 3");
    }
    if (!is_indecomposable(forms)) {
        throw PreconditionError("decomposable: the forms split into blocks in disjoint variables");
    }
    return Arrangement(std::move(forms));
}

struct SingularPoint {
    std::array<Rational, 3> point;
    std::size_t multiplicity = 0;
};

inline std::string to_string(const SingularPoint& z) {
    return "[" + to_string(z.point[0]) + ":" + to_string(z.point[1]) + ":" + to_string(z.point[2]) + "]";
}

/// Pairwise line intersections in P^2, deduplicated, with the number of lines through each.
inline std::vector<SingularPoint> singular_points(const Arrangement& arrangement) {
    const auto& forms = arrangement.forms();
    std::vector<std::array<Rational, 3>> points;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        for (std::size_t j = i + 1; j < forms.size(); ++j) {
            const auto& a = forms[i];
            const auto& b = forms[j];
            // Cross product of the two normals spans their common zero.
            std::array<Rational, 3> p{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
            const auto lead = std::find_if(p.begin(), p.end(), [](const Rational& v) { return v != 0; });
            const Rational s = *lead;
            for (auto& v : p) {
                v /= s;
            }
            if (std::find(points.begin(), points.end(), p) == points.end()) {
                points.push_back(p);
            }
        }
    }
    std::sort(points.begin(), points.end());
    std::vector<SingularPoint> out;
    for (const auto& p : points) {
        std::size_t m = 0;
        for (const auto& l : forms) {
            if (l[0] * p[0] + l[1] * p[1] + l[2] * p[2] == 0) {
                ++m;
            }
        }
        out.push_back({p, m});
    }
    return out;
}

/// Lattice-determined roots: {-k/d : 3 <= k <= 2d-3} and {-i/m_z : 2 <= i <= 2 m_z - 2} over singular points z.
inline RootSet comb_roots(const Arrangement& arrangement) {
    RootSet out;
    const long d = static_cast<long>(arrangement.degree());
    for (long k = 3; k <= 2 * d - 3; ++k) {
        out.insert(make_rational(-k, d));
    }
    for (const auto& z : singular_points(arrangement)) {
        const long m = static_cast<long>(z.multiplicity);
        for (long i = 2; i <= 2 * m - 2; ++i) {
            out.insert(make_rational(-i, m));
        }
    }
    return out;
}

/// Dimension of the kernel of the 3 x d matrix of normals.
inline std::size_t relation_space_dimension(const Arrangement& arrangement) {
    RationalMatrix m(3, arrangement.degree());
    for (std::size_t k = 0; k < arrangement.degree(); ++k) {
        for (std::size_t i = 0; i < 3; ++i) {
            m(i, k) = arrangement.forms()[k][i];
        }
    }
    return kernel_dimension(m);
}

/// One relation per concurrent triple of lines, with coefficients from the unique dependency of their normals.
inline std::vector<RationalVector> length_three_relations(const Arrangement& arrangement) {
    const auto& forms = arrangement.forms();
    const std::size_t d = forms.size();
    std::vector<RationalVector> out;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            for (std::size_t k = j + 1; k < d; ++k) {
                RationalMatrix m(3, 3);
                const std::array<std::size_t, 3> idx{i, j, k};
                for (std::size_t c = 0; c < 3; ++c) {
                    for (std::size_t r = 0; r < 3; ++r) {
                        m(r, c) = forms[idx[c]][r];
                    }
                }
                const auto kernel = kernel_basis(m);
                if (kernel.size() != 1) {
                    continue;
                }
                RationalVector v(d);
                for (std::size_t c = 0; c < 3; ++c) {
                    v[idx[c]] = kernel.front()[c];
                }
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

inline std::size_t length_three_span_dimension(const Arrangement& arrangement) {
    return span_dimension(length_three_relations(arrangement));
}

/// Formal iff the relation space is spanned by relations of length 3.
inline bool is_formal(const Arrangement& arrangement) {
    return length_three_span_dimension(arrangement) == relation_space_dimension(arrangement);
}

/// Every dimension entering the six characterizations of the non-combinatorial root.
struct ConditionWitness {
    std::size_t h0_at_d_minus_1 = 0;
    std::size_t h0_at_2d_minus_5 = 0;
    long regularity = 0;
    std::size_t sheaf_dim_e = 0;
    std::size_t milnor_dim_at_2d_minus_5 = 0;
    std::size_t milnor_dim_at_d_minus_1 = 0;
    std::size_t der_log0_at_d_minus_2 = 0;
    std::size_t binomial_term = 0;  // C(d+1, 2) - 3
    std::size_t h1_at_d_minus_1 = 0;
    // dim Gamma(P^2, sheaf of R/(df) twisted by q) = [R/(df)]_q - h0_q + h1_q
    std::size_t gamma_at_d_minus_1 = 0;
    std::size_t gamma_at_2d_minus_5 = 0;
    std::size_t relation_space_dim = 0;
    std::size_t length_three_span_dim = 0;
};

struct ConditionReport {
    bool cond_b = false;  // [H0]_{d-1} != 0
    bool cond_c = false;  // [H0]_{2d-5} != 0
    bool cond_d = false;  // reg R/(df) = 2d - 5
    bool cond_e = false;  // e < dim [R/(df)]_{2d-5}
    bool cond_f = false;  // e < dim Der0_{d-2} + C(d+1,2) - 3
    bool cond_g = false;  // not formal
    ConditionWitness witness_dims;
    bool consistent = false;
};

namespace detail {

inline ConditionReport evaluate_conditions(const Arrangement& arrangement, const MilnorProfile& profile,
                                           const Limits& limits) {
    const long d = static_cast<long>(arrangement.degree());
    const WeightSystem w = WeightSystem::standard();
    const GroebnerBasis gj = buchberger(profile.jacobian, weighted_grevlex(w), limits);
    const RegularityReport reg = regularity_report(profile.jacobian, limits);

    ConditionReport r;
    auto& wd = r.witness_dims;
    wd.h0_at_d_minus_1 = profile.h0.at(d - 1);
    wd.h0_at_2d_minus_5 = profile.h0.at(2 * d - 5);
    wd.regularity = reg.regularity;
    wd.sheaf_dim_e = reg.sheaf_dim_e;
    wd.milnor_dim_at_2d_minus_5 = graded_dimension(gj, w, 2 * d - 5);
    wd.milnor_dim_at_d_minus_1 = graded_dimension(gj, w, d - 1);
    wd.der_log0_at_d_minus_2 = der_log0_graded_dimension(profile.f, w, d - 2);
    wd.binomial_term = static_cast<std::size_t>((d + 1) * d / 2 - 3);
    wd.h1_at_d_minus_1 = h1_dimension(profile.jacobian, d - 1, limits);
    wd.gamma_at_d_minus_1 = wd.milnor_dim_at_d_minus_1 - wd.h0_at_d_minus_1 + wd.h1_at_d_minus_1;
    wd.gamma_at_2d_minus_5 = wd.milnor_dim_at_2d_minus_5 - wd.h0_at_2d_minus_5 +
                             h1_dimension(profile.jacobian, 2 * d - 5, limits);
    wd.relation_space_dim = relation_space_dimension(arrangement);
    wd.length_three_span_dim = length_three_span_dimension(arrangement);

    r.cond_b = wd.h0_at_d_minus_1 > 0;
    r.cond_c = wd.h0_at_2d_minus_5 > 0;
    r.cond_d = wd.regularity == 2 * d - 5;
    r.cond_e = wd.sheaf_dim_e < wd.milnor_dim_at_2d_minus_5;
    r.cond_f = wd.sheaf_dim_e < wd.der_log0_at_d_minus_2 + wd.binomial_term;
    r.cond_g = wd.length_three_span_dim != wd.relation_space_dim;
    r.consistent = r.cond_b == r.cond_c && r.cond_b == r.cond_d && r.cond_b == r.cond_e && r.cond_b == r.cond_f &&
                   r.cond_b == r.cond_g;
    return r;
}

}  // namespace detail

inline ConditionReport condition_report(const Arrangement& arrangement, const Limits& limits = {}) {
    const MilnorProfile profile = milnor_profile(arrangement.polynomial(), WeightSystem::standard(), limits);
    return detail::evaluate_conditions(arrangement, profile, limits);
}

struct ArrangementRootReport {
    RootSet comb_roots;
    Rational non_comb_root;
    bool non_comb_present = false;
    RootSet full_zero_set;
    ConditionReport conditions;
    std::vector<SingularPoint> singular_points;
    MilnorProfile profile;
};

/// Complete zero set: the combinatorial roots, plus (2 - 2d)/d exactly when [H0]_{d-1} != 0.
inline ArrangementRootReport full_root_report(const Arrangement& arrangement, const Limits& limits = {}) {
    const long d = static_cast<long>(arrangement.degree());
    MilnorProfile profile = milnor_profile(arrangement.polynomial(), WeightSystem::standard(), limits);
    ConditionReport conditions = detail::evaluate_conditions(arrangement, profile, limits);
    const ConditionReport& c = conditions;
    // Condition (f) is reported but not enforced here: with a zero-dimensional
    // singular scheme its left side is the constant e, so it does not track (b).
    if (!(c.cond_b == c.cond_c && c.cond_b == c.cond_d && c.cond_b == c.cond_e && c.cond_b == c.cond_g)) {
        throw InconsistencyError("conditions (b), (c), (d), (e), (g) disagree");
    }
    ArrangementRootReport report{comb_roots(arrangement),
                                 make_rational(2 - 2 * d, d),
                                 conditions.cond_b,
                                 {},
                                 std::move(conditions),
                                 singular_points(arrangement),
                                 std::move(profile)};
    report.full_zero_set = report.comb_roots;
    if (report.non_comb_present) {
        report.full_zero_set.insert(report.non_comb_root);
    }
    return report;
}

}  // namespace bs3

#endif  // BS3_ARRANGEMENT_HPP

#ifndef BS3_GROEBNER_HPP
#define BS3_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bs3/errors.hpp"
#include "bs3/polynomial.hpp"
#include "bs3/rational.hpp"

namespace bs3 {

enum class OrderKind { grevlex, lex, block };

/// Monomial order. grevlex may carry positive integer weights (weighted degree
/// first, reverse lexicographic tie-break). block(k) compares the first k
/// variables lexicographically, then the rest by (weighted) grevlex.
class MonomialOrder {
public:
    static MonomialOrder grevlex(std::size_t variable_count, std::vector<long> weights = {}) {
        return MonomialOrder(OrderKind::grevlex, variable_count, 0, std::move(weights));
    }
    static MonomialOrder lex(std::size_t variable_count) { return MonomialOrder(OrderKind::lex, variable_count, 0, {}); }
    static MonomialOrder block(std::size_t variable_count, std::size_t elim_count, std::vector<long> weights = {}) {
        if (elim_count >= variable_count) {
            throw PreconditionError("block order must keep at least one variable");
        }
        return MonomialOrder(OrderKind::block, variable_count, elim_count, std::move(weights));
    }

    OrderKind kind() const noexcept { return kind_; }
    std::size_t variable_count() const noexcept { return n_; }
    std::size_t elim_count() const noexcept { return elim_; }
    const std::vector<long>& weights() const noexcept { return weights_; }

    /// Weighted degree used for ordering and pair selection.
    long degree(const Monomial& m) const noexcept {
        long d = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            d += weights_[i] * static_cast<long>(m[i]);
        }
        return d;
    }

    /// True when a > b.
    bool greater(const Monomial& a, const Monomial& b) const noexcept {
        switch (kind_) {
            case OrderKind::lex:
                for (std::size_t i = 0; i < n_; ++i) {
                    if (a[i] != b[i]) {
                        return a[i] > b[i];
                    }
                }
                return false;
            case OrderKind::block:
                for (std::size_t i = 0; i < elim_; ++i) {
                    if (a[i] != b[i]) {
                        return a[i] > b[i];
                    }
                }
                return grevlex_greater(a, b, elim_);
            case OrderKind::grevlex:
                break;
        }
        return grevlex_greater(a, b, 0);
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.elim_ == b.elim_ && a.weights_ == b.weights_;
    }

private:
    MonomialOrder(OrderKind kind, std::size_t n, std::size_t elim, std::vector<long> weights)
        : kind_(kind), n_(n), elim_(elim), weights_(std::move(weights)) {
        if (weights_.empty()) {
            weights_.assign(n_, 1);
        }
        if (weights_.size() != n_) {
            throw PreconditionError("order weight count differs from variable count");
        }
        for (long w : weights_) {
            if (w <= 0) {
                throw PreconditionError("order weights must be positive");
            }
        }
    }

    bool grevlex_greater(const Monomial& a, const Monomial& b, std::size_t from) const noexcept {
        long da = 0;
        long db = 0;
        for (std::size_t i = from; i < n_; ++i) {
            da += weights_[i] * static_cast<long>(a[i]);
            db += weights_[i] * static_cast<long>(b[i]);
        }
        if (da != db) {
            return da > db;
        }
        for (std::size_t i = n_; i-- > from;) {
            if (a[i] != b[i]) {
                return a[i] < b[i];
            }
        }
        return false;
    }

    OrderKind kind_;
    std::size_t n_;
    std::size_t elim_;
    std::vector<long> weights_;
};

/// Finitely generated ideal. Zero generators are dropped, so an empty list is the zero ideal.
class Ideal {
public:
    explicit Ideal(std::size_t variable_count = 3) : n_(variable_count) {}

    Ideal(std::vector<Polynomial> generators, std::size_t variable_count) : n_(variable_count) {
        for (auto& g : generators) {
            if (g.variable_count() != n_) {
                throw PreconditionError("generator lives in a different ring");
            }
            if (!g.is_zero()) {
                gens_.push_back(std::move(g));
            }
        }
    }

    explicit Ideal(std::vector<Polynomial> generators)
        : Ideal(generators, generators.empty() ? 3 : generators.front().variable_count()) {}

    std::size_t variable_count() const noexcept { return n_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }

private:
    std::size_t n_;
    std::vector<Polynomial> gens_;
};

/// Computation limits shared by every operation that runs Buchberger's algorithm.
struct Limits {
    std::size_t step_cap = 10'000'000;
};

/// Reduced Groebner basis: monic elements, sorted by increasing leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elements, std::vector<Monomial> leading)
        : order_(std::move(order)), elements_(std::move(elements)), leading_(std::move(leading)) {}

    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Polynomial>& elements() const noexcept { return elements_; }
    const std::vector<Monomial>& leading_monomials() const noexcept { return leading_; }
    std::size_t variable_count() const noexcept { return order_.variable_count(); }

    bool is_unit() const noexcept { return leading_.size() == 1 && leading_.front().is_one(); }
    bool is_zero() const noexcept { return elements_.empty(); }

    /// True when no leading monomial divides m.
    bool is_standard(const Monomial& m) const noexcept {
        return std::none_of(leading_.begin(), leading_.end(), [&](const Monomial& l) { return l.divides(m); });
    }

    Ideal ideal() const { return Ideal(elements_, variable_count()); }

private:
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
    std::vector<Monomial> leading_;
};

namespace detail {

struct IntTerm {
    Monomial m;
    Integer c;
};

/// Integer polynomial sorted by decreasing monomial under the active order.
struct IntPoly {
    std::vector<IntTerm> terms;
    long sugar = 0;

    bool empty() const noexcept { return terms.empty(); }
    const Monomial& lm() const { return terms.front().m; }
    const Integer& lc() const { return terms.front().c; }
};

inline void divide_content(std::vector<IntTerm>& terms) {
    Integer g = 0;
    for (const auto& t : terms) {
        g = gcd_of(g, t.c);
        if (g == 1) {
            return;
        }
    }
    if (g > 1) {
        for (auto& t : terms) {
            mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
        }
    }
}

inline IntPoly to_int_poly(const Polynomial& p, const MonomialOrder& order) {
    IntPoly out;
    Integer den = 1;
    for (const auto& t : p.terms()) {
        den = lcm_of(den, t.coeff.get_den());
    }
    for (const auto& t : p.terms()) {
        const Rational v = t.coeff * Rational(den);
        out.terms.push_back({t.monomial, v.get_num()});
        out.sugar = std::max(out.sugar, order.degree(t.monomial));
    }
    std::sort(out.terms.begin(), out.terms.end(),
              [&](const IntTerm& a, const IntTerm& b) { return order.greater(a.m, b.m); });
    divide_content(out.terms);
    if (!out.terms.empty() && out.lc() < 0) {
        for (auto& t : out.terms) {
            t.c = -t.c;
        }
    }
    return out;
}

inline Polynomial to_monic_polynomial(const IntPoly& p, std::size_t n) {
    std::vector<Term> terms;
    terms.reserve(p.terms.size());
    const Integer& lc = p.lc();
    for (const auto& t : p.terms) {
        terms.push_back({t.m, make_rational(t.c, lc)});
    }
    return Polynomial::from_terms(n, terms);
}

class BuchbergerEngine {
public:
    BuchbergerEngine(const MonomialOrder& order, const Limits& limits) : order_(order), limits_(limits) {}

    std::vector<IntPoly> run(std::vector<IntPoly> input) {
        for (auto& f : input) {
            if (!f.empty()) {
                add(std::move(f));
            }
        }
        while (!pairs_.empty()) {
            const std::size_t k = select_pair();
            const Pair pair = pairs_[k];
            pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));
            IntPoly s = s_polynomial(basis_[pair.i], basis_[pair.j]);
            reduce(s);
            if (!s.empty()) {
                add(std::move(s));
            }
        }
        return interreduce();
    }

    /// Full reduction of p by the active basis elements.
    void reduce(IntPoly& p) {
        std::size_t done = 0;
        while (done < p.terms.size()) {
            const std::size_t g = find_reducer(p.terms[done].m);
            if (g == basis_.size()) {
                ++done;
                continue;
            }
            reduce_term(p, done, basis_[g]);
        }
        if (!p.terms.empty()) {
            divide_content(p.terms);
            if (p.lc() < 0) {
                for (auto& t : p.terms) {
                    t.c = -t.c;
                }
            }
        }
    }

    std::size_t steps() const noexcept { return steps_; }

private:
    struct Pair {
        std::size_t i;
        std::size_t j;
        Monomial lcm;
        long sugar;
    };

    std::size_t find_reducer(const Monomial& m) const {
        std::size_t best = basis_.size();
        for (std::size_t k : active_) {
            if (lms_[k].divides(m) && (best == basis_.size() || basis_[k].terms.size() < basis_[best].terms.size())) {
                best = k;
            }
        }
        return best;
    }

    // p <- a*p - b*(m/lm(g))*g, where the term at index `at` is cancelled.
    void reduce_term(IntPoly& p, std::size_t at, const IntPoly& g) {
        if (++steps_ > limits_.step_cap) {
            throw ResourceLimitError("computation too large: Buchberger step cap of " +
                                     std::to_string(limits_.step_cap) + " reductions exceeded");
        }
        const Monomial shift = p.terms[at].m.divided_by(g.lm());
        const Integer common = gcd_of(g.lc(), p.terms[at].c);
        const Integer a = g.lc() / common;
        const Integer b = p.terms[at].c / common;
        std::vector<IntTerm> out;
        out.reserve(p.terms.size() + g.terms.size());
        const bool scale = a != 1;
        for (std::size_t k = 0; k < at; ++k) {
            out.push_back(p.terms[k]);
            if (scale) {
                out.back().c *= a;
            }
        }
        std::size_t i = at + 1;
        std::size_t j = 1;
        Monomial gm;
        while (i < p.terms.size() || j < g.terms.size()) {
            if (j < g.terms.size()) {
                gm = g.terms[j].m * shift;
            }
            if (j == g.terms.size() || (i < p.terms.size() && order_.greater(p.terms[i].m, gm))) {
                out.push_back(p.terms[i]);
                if (scale) {
                    out.back().c *= a;
                }
                ++i;
            } else if (i == p.terms.size() || order_.greater(gm, p.terms[i].m)) {
                out.push_back({gm, -b * g.terms[j].c});
                ++j;
            } else {
                Integer c = scale ? Integer(a * p.terms[i].c) : p.terms[i].c;
                c -= b * g.terms[j].c;
                if (c != 0) {
                    out.push_back({gm, std::move(c)});
                }
                ++i;
                ++j;
            }
        }
        p.sugar = std::max(p.sugar, g.sugar + order_.degree(shift));
        p.terms = std::move(out);
        if (scale) {
            divide_content(p.terms);
        }
    }

    IntPoly s_polynomial(const IntPoly& f, const IntPoly& g) const {
        const Monomial l = lcm(f.lm(), g.lm());
        const Monomial sf = l.divided_by(f.lm());
        const Monomial sg = l.divided_by(g.lm());
        const Integer common = gcd_of(f.lc(), g.lc());
        const Integer a = g.lc() / common;
        const Integer b = f.lc() / common;
        IntPoly s;
        s.sugar = std::max(f.sugar + order_.degree(sf), g.sugar + order_.degree(sg));
        std::size_t i = 1;
        std::size_t j = 1;
        while (i < f.terms.size() || j < g.terms.size()) {
            Monomial fm;
            Monomial gm;
            if (i < f.terms.size()) {
                fm = f.terms[i].m * sf;
            }
            if (j < g.terms.size()) {
                gm = g.terms[j].m * sg;
            }
            if (j == g.terms.size() || (i < f.terms.size() && order_.greater(fm, gm))) {
                s.terms.push_back({fm, a * f.terms[i].c});
                ++i;
            } else if (i == f.terms.size() || order_.greater(gm, fm)) {
                s.terms.push_back({gm, -b * g.terms[j].c});
                ++j;
            } else {
                Integer c = a * f.terms[i].c - b * g.terms[j].c;
                if (c != 0) {
                    s.terms.push_back({fm, std::move(c)});
                }
                ++i;
                ++j;
            }
        }
        divide_content(s.terms);
        return s;
    }

    std::size_t select_pair() const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const Pair& a = pairs_[k];
            const Pair& b = pairs_[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar) {
                    best = k;
                }
            } else if (order_.greater(b.lcm, a.lcm)) {
                best = k;
            }
        }
        return best;
    }

    // Gebauer-Moeller update with the product and chain criteria.
    void add(IntPoly h) {
        const std::size_t k = basis_.size();
        const Monomial lh = h.lm();
        basis_.push_back(std::move(h));
        lms_.push_back(lh);

        std::vector<Pair> candidates;
        for (std::size_t i : active_) {
            const Monomial l = lcm(lms_[i], lh);
            const long sugar = std::max(basis_[i].sugar + order_.degree(l.divided_by(lms_[i])),
                                        basis_[k].sugar + order_.degree(l.divided_by(lh)));
            candidates.push_back({i, k, l, sugar});
        }
        std::vector<Pair> kept;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const Pair& p = candidates[c];
            bool keep = lms_[p.i].coprime_with(lh);
            if (!keep) {
                keep = true;
                for (std::size_t d = c + 1; d < candidates.size() && keep; ++d) {
                    if (candidates[d].lcm.divides(p.lcm)) {
                        keep = false;
                    }
                }
                for (std::size_t d = 0; d < kept.size() && keep; ++d) {
                    if (kept[d].lcm.divides(p.lcm)) {
                        keep = false;
                    }
                }
            }
            if (keep) {
                kept.push_back(p);
            }
        }
        std::vector<Pair> next;
        for (const Pair& p : pairs_) {
            const bool chain = lh.divides(p.lcm) && lcm(lms_[p.i], lh) != p.lcm && lcm(lms_[p.j], lh) != p.lcm;
            if (!chain) {
                next.push_back(p);
            }
        }
        for (const Pair& p : kept) {
            if (!lms_[p.i].coprime_with(lh)) {
                next.push_back(p);
            }
        }
        pairs_ = std::move(next);

        std::vector<std::size_t> still;
        for (std::size_t i : active_) {
            if (!lh.divides(lms_[i])) {
                still.push_back(i);
            }
        }
        still.push_back(k);
        active_ = std::move(still);
    }

    std::vector<IntPoly> interreduce() {
        // Minimal basis first: inputs enter unreduced, so leading monomials may repeat or divide each other.
        std::vector<std::size_t> keep;
        for (std::size_t a = 0; a < active_.size(); ++a) {
            const Monomial& la = lms_[active_[a]];
            bool redundant = false;
            for (std::size_t b = 0; b < active_.size() && !redundant; ++b) {
                const Monomial& lb = lms_[active_[b]];
                redundant = b != a && lb.divides(la) && (lb != la || b < a);
            }
            if (!redundant) {
                keep.push_back(active_[a]);
            }
        }
        std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) { return order_.greater(lms_[b], lms_[a]); });
        std::vector<IntPoly> out;
        for (std::size_t idx : keep) {
            IntPoly p = basis_[idx];
            std::size_t done = 1;
            while (done < p.terms.size()) {
                std::size_t g = basis_.size();
                for (std::size_t k : keep) {
                    if (k != idx && lms_[k].divides(p.terms[done].m)) {
                        g = k;
                        break;
                    }
                }
                if (g == basis_.size()) {
                    ++done;
                    continue;
                }
                reduce_term(p, done, basis_[g]);
            }
            divide_content(p.terms);
            out.push_back(std::move(p));
        }
        return out;
    }


    const MonomialOrder& order_;
    const Limits& limits_;
    std::vector<IntPoly> basis_;
    std::vector<Monomial> lms_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
    std::size_t steps_ = 0;
};

inline GroebnerBasis assemble(const MonomialOrder& order, const std::vector<IntPoly>& reduced) {
    std::vector<Polynomial> elements;
    std::vector<Monomial> leading;
    for (const auto& p : reduced) {
        elements.push_back(to_monic_polynomial(p, order.variable_count()));
        leading.push_back(p.lm());
    }
    return GroebnerBasis(order, std::move(elements), std::move(leading));
}

}  // namespace detail

/// Reduced Groebner basis of I under `order` (Buchberger with sugar selection
/// and the Gebauer-Moeller criteria). Deterministic for a fixed input.
inline GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const Limits& limits = {}) {
    if (ideal.variable_count() != order.variable_count()) {
        throw PreconditionError("order and ideal have different variable counts");
    }
    std::vector<detail::IntPoly> input;
    for (const auto& g : ideal.generators()) {
        input.push_back(detail::to_int_poly(g, order));
    }
    detail::BuchbergerEngine engine(order, limits);
    return detail::assemble(order, engine.run(std::move(input)));
}

/// Remainder of p modulo the reduced basis G; zero exactly when p is in the ideal.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
    if (p.variable_count() != basis.variable_count()) {
        throw PreconditionError("polynomial and basis live in different rings");
    }
    const MonomialOrder& order = basis.order();
    auto by_order = [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); };
    std::vector<Term> work = p.terms();
    std::sort(work.begin(), work.end(), by_order);
    std::vector<Term> remainder;
    while (!work.empty()) {
        const Term lead = work.front();
        std::size_t g = basis.elements().size();
        for (std::size_t k = 0; k < basis.leading_monomials().size(); ++k) {
            if (basis.leading_monomials()[k].divides(lead.monomial)) {
                g = k;
                break;
            }
        }
        if (g == basis.elements().size()) {
            remainder.push_back(lead);
            work.erase(work.begin());
            continue;
        }
        const Monomial shift = lead.monomial.divided_by(basis.leading_monomials()[g]);
        std::vector<Term> sub;
        for (const auto& t : basis.elements()[g].terms()) {
            sub.push_back({t.monomial * shift, -lead.coeff * t.coeff});
        }
        sub.insert(sub.end(), work.begin(), work.end());
        Polynomial merged = Polynomial::from_terms(p.variable_count(), sub);
        work = merged.terms();
        std::sort(work.begin(), work.end(), by_order);
    }
    return Polynomial::from_terms(p.variable_count(), remainder);
}

inline bool contains(const GroebnerBasis& basis, const Polynomial& p) { return normal_form(p, basis).is_zero(); }

/// Every S-polynomial of the basis reduces to zero.
inline bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
    const auto& el = basis.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
        for (std::size_t j = i + 1; j < el.size(); ++j) {
            const Monomial& li = basis.leading_monomials()[i];
            const Monomial& lj = basis.leading_monomials()[j];
            const Monomial l = lcm(li, lj);
            const Polynomial s = el[i].shifted(l.divided_by(li)) - el[j].shifted(l.divided_by(lj));
            if (!normal_form(s, basis).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

/// Every generator of `inner` lies in the ideal of `outer`.
inline bool is_subideal(const Ideal& inner, const GroebnerBasis& outer) {
    return std::all_of(inner.generators().begin(), inner.generators().end(),
                       [&](const Polynomial& g) { return contains(outer, g); });
}

namespace detail {

/// Moves p into a ring with `extra` new leading variables.
inline Polynomial prepend_variables(const Polynomial& p, std::size_t extra) {
    const std::size_t n = p.variable_count() + extra;
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        Monomial m(n);
        for (std::size_t i = 0; i < t.monomial.size(); ++i) {
            m.set(i + extra, t.monomial[i]);
        }
        out.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(n, out);
}

inline Polynomial drop_leading_variables(const Polynomial& p, std::size_t count) {
    const std::size_t n = p.variable_count() - count;
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m.set(i, t.monomial[i + count]);
        }
        out.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(n, out);
}

inline Polynomial swap_variables(const Polynomial& p, std::size_t a, std::size_t b) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        Monomial m = t.monomial;
        m.set(a, t.monomial[b]);
        m.set(b, t.monomial[a]);
        out.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(p.variable_count(), out);
}

inline std::vector<long> order_weights(const WeightSystem& w) { return w.scaled(); }

inline void require_homogeneous(const Ideal& ideal, const WeightSystem& w) {
    if (ideal.variable_count() != w.size()) {
        throw PreconditionError("weight count differs from variable count");
    }
    for (const auto& g : ideal.generators()) {
        if (!is_quasi_homogeneous(g, w)) {
            throw PreconditionError("ideal is not weighted-homogeneous: " + to_string(g));
        }
    }
}

}  // namespace detail

/// Generators of I intersected with the subring without the first `drop_count` variables.
inline Ideal eliminate(const Ideal& ideal, std::size_t drop_count, const Limits& limits = {},
                       std::vector<long> rest_weights = {}) {
    const std::size_t n = ideal.variable_count();
    if (drop_count >= n) {
        throw PreconditionError("cannot eliminate every variable");
    }
    if (!rest_weights.empty()) {
        rest_weights.insert(rest_weights.begin(), drop_count, 1);
    }
    const GroebnerBasis gb = buchberger(ideal, MonomialOrder::block(n, drop_count, std::move(rest_weights)), limits);
    std::vector<Polynomial> kept;
    for (std::size_t k = 0; k < gb.elements().size(); ++k) {
        bool free = true;
        for (std::size_t i = 0; i < drop_count; ++i) {
            free = free && gb.leading_monomials()[k][i] == 0;
        }
        if (free) {
            kept.push_back(detail::drop_leading_variables(gb.elements()[k], drop_count));
        }
    }
    return Ideal(std::move(kept), n - drop_count);
}

/// I : g^infinity, by adjoining t with t*g - 1 and eliminating t.
inline Ideal saturate_by_poly(const Ideal& ideal, const Polynomial& g, const Limits& limits = {}) {
    if (g.is_zero()) {
        throw PreconditionError("saturation by the zero polynomial");
    }
    if (g.variable_count() != ideal.variable_count()) {
        throw PreconditionError("saturating polynomial lives in a different ring");
    }
    const std::size_t n = ideal.variable_count() + 1;
    std::vector<Polynomial> gens;
    for (const auto& f : ideal.generators()) {
        gens.push_back(detail::prepend_variables(f, 1));
    }
    gens.push_back(Polynomial::variable(0, n) * detail::prepend_variables(g, 1) - Polynomial::constant(1, n));
    return eliminate(Ideal(std::move(gens), n), 1, limits);
}

/// I intersected with J, via t*I + (1-t)*J and elimination of t.
inline Ideal ideal_intersection(const Ideal& a, const Ideal& b, const Limits& limits = {},
                                std::vector<long> weights = {}) {
    if (a.variable_count() != b.variable_count()) {
        throw PreconditionError("ideals live in different rings");
    }
    if (a.is_zero() || b.is_zero()) {
        return Ideal(a.variable_count());
    }
    const std::size_t n = a.variable_count() + 1;
    const Polynomial t = Polynomial::variable(0, n);
    const Polynomial one_minus_t = Polynomial::constant(1, n) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) {
        gens.push_back(t * detail::prepend_variables(f, 1));
    }
    for (const auto& f : b.generators()) {
        gens.push_back(one_minus_t * detail::prepend_variables(f, 1));
    }
    return eliminate(Ideal(std::move(gens), n), 1, limits, std::move(weights));
}

/// I : x_i^infinity for a weighted-homogeneous I. Uses the weighted grevlex
/// basis with x_i placed last: every basis element divided by its largest
/// power of x_i generates the saturation.
inline Ideal saturate_by_variable(const Ideal& ideal, std::size_t index, const WeightSystem& w,
                                  const Limits& limits = {}) {
    detail::require_homogeneous(ideal, w);
    const std::size_t n = ideal.variable_count();
    if (index >= n) {
        throw PreconditionError("variable index out of range");
    }
    const std::size_t last = n - 1;
    std::vector<Polynomial> swapped;
    for (const auto& g : ideal.generators()) {
        swapped.push_back(detail::swap_variables(g, index, last));
    }
    std::vector<long> weights = detail::order_weights(w);
    std::swap(weights[index], weights[last]);
    const GroebnerBasis gb = buchberger(Ideal(std::move(swapped), n), MonomialOrder::grevlex(n, weights), limits);
    std::vector<Polynomial> out;
    for (const auto& g : gb.elements()) {
        unsigned power = ~0U;
        for (const auto& t : g.terms()) {
            power = std::min(power, t.monomial[last]);
        }
        Monomial divisor(n);
        divisor.set(last, power);
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            terms.push_back({t.monomial.divided_by(divisor), t.coeff});
        }
        out.push_back(detail::swap_variables(Polynomial::from_terms(n, terms), index, last));
    }
    return Ideal(std::move(out), n);
}

/// I : m^infinity = intersection over i of (I : x_i^infinity), for weighted-homogeneous I.
inline Ideal saturate_irrelevant(const Ideal& ideal, const WeightSystem& w, const Limits& limits = {}) {
    detail::require_homogeneous(ideal, w);
    const std::size_t n = ideal.variable_count();
    if (ideal.is_zero()) {
        return ideal;
    }
    const MonomialOrder order = MonomialOrder::grevlex(n, detail::order_weights(w));
    std::vector<Ideal> parts;
    for (std::size_t i = 0; i < n; ++i) {
        Ideal part = saturate_by_variable(ideal, i, w, limits);
        if (!buchberger(part, order, limits).is_unit()) {
            parts.push_back(std::move(part));
        }
    }
    if (parts.empty()) {
        return Ideal({Polynomial::constant(1, n)}, n);
    }
    Ideal acc = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) {
        acc = ideal_intersection(acc, parts[k], limits, detail::order_weights(w));
    }
    return buchberger(acc, order, limits).ideal();
}

inline Ideal saturate_irrelevant(const Ideal& ideal, const Limits& limits = {}) {
    return saturate_irrelevant(ideal, WeightSystem::standard(ideal.variable_count()), limits);
}

}  // namespace bs3

#endif  // BS3_GROEBNER_HPP

// Acceptance runner: one PASS/FAIL line per criterion, followed by indented details.
// Exits 0 once every criterion has been evaluated; the lines carry the verdicts.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bs3/arrangement.hpp"
#include "bs3/parse.hpp"
#include "corpus.hpp"

using namespace bs3;

namespace {

struct Verdict {
    bool ok = true;
    std::vector<std::string> notes;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

int failures = 0;

void report(int id, const std::string& title, const Verdict& v) {
    std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << "\n";
    for (const auto& n : v.notes) {
        std::cout << "    " << n << "\n";
    }
    failures += v.ok ? 0 : 1;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Evaluated {
    std::string name;
    Arrangement arrangement;
    ArrangementRootReport report;
};

std::vector<Evaluated> evaluate_corpus() {
    std::vector<Evaluated> out;
    for (auto& e : corpus::full()) {
        auto r = full_root_report(e.arrangement);
        out.push_back({e.name, e.arrangement, std::move(r)});
    }
    return out;
}

Verdict ziegler_pair() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const auto f = full_root_report(validate(parse_forms(corpus::kZieglerF)));
    const double tf = seconds_since(t0);
    const auto t1 = std::chrono::steady_clock::now();
    const auto g = full_root_report(validate(parse_forms(corpus::kZieglerG)));
    const double tg = seconds_since(t1);
    const auto& wf = f.conditions.witness_dims;
    const auto& wg = g.conditions.witness_dims;
    auto num = [](std::size_t a) { return std::to_string(a); };

    v.check(f.profile.h0.at(8) == 1 && f.profile.h0.at(13) == 1,
            "f: dim H0_8 = dim H0_13 = 1 (got " + num(f.profile.h0.at(8)) + ", " + num(f.profile.h0.at(13)) + ")");
    v.check(g.profile.h0.at(8) == 0 && g.profile.h0.at(13) == 0,
            "g: dim H0_8 = dim H0_13 = 0 (got " + num(g.profile.h0.at(8)) + ", " + num(g.profile.h0.at(13)) + ")");
    v.check(wf.gamma_at_2d_minus_5 == 42 && wg.gamma_at_2d_minus_5 == 42,
            "Gamma at twist 13 is 42 for both (got " + num(wf.gamma_at_2d_minus_5) + ", " +
                num(wg.gamma_at_2d_minus_5) + ")");
    v.check(wf.milnor_dim_at_2d_minus_5 == 43 && wg.milnor_dim_at_2d_minus_5 == 42,
            "[R/J]_13 is 43 vs 42 (got " + num(wf.milnor_dim_at_2d_minus_5) + ", " +
                num(wg.milnor_dim_at_2d_minus_5) + ")");
    v.check(wf.der_log0_at_d_minus_2 == 24 && wg.der_log0_at_d_minus_2 == 24,
            "dim Der0_7 is 24 for both (got " + num(wf.der_log0_at_d_minus_2) + ", " + num(wg.der_log0_at_d_minus_2) +
                ")");
    v.check(wf.binomial_term == 42, "C(10,2) - 3 = 42 (got " + num(wf.binomial_term) + ")");
    v.check(wf.gamma_at_d_minus_1 == 65 && wg.gamma_at_d_minus_1 == 66,
            "Gamma at twist 8 is 65 vs 66 (got " + num(wf.gamma_at_d_minus_1) + ", " + num(wg.gamma_at_d_minus_1) +
                "; h1_8 = " + num(wf.h1_at_d_minus_1) + ", " + num(wg.h1_at_d_minus_1) + ")");
    const RootSet diff_fg = f.full_zero_set - g.full_zero_set;
    const RootSet diff_gf = g.full_zero_set - f.full_zero_set;
    v.check(diff_fg == RootSet({make_rational(-16, 9)}) && diff_gf.empty(),
            "zero sets differ exactly by -16/9 (f\\g = " + to_string(diff_fg) + ", g\\f = " + to_string(diff_gf) + ")");
    v.check(tf < 300 && tg < 300, "runtime under 5 minutes per arrangement");
    std::ostringstream t;
    t.precision(3);
    t << "runtime f " << tf << " s, g " << tg << " s";
    v.note(t.str());
    return v;
}

Verdict condition_equivalence(const std::vector<Evaluated>& corpus) {
    Verdict v;
    std::size_t mismatched = 0, without_f = 0;
    for (const auto& e : corpus) {
        const auto& c = e.report.conditions;
        const bool rest = c.cond_b == c.cond_c && c.cond_b == c.cond_d && c.cond_b == c.cond_e && c.cond_b == c.cond_g;
        without_f += rest ? 0 : 1;
        if (!c.consistent) {
            ++mismatched;
            std::string flags;
            for (bool b : {c.cond_b, c.cond_c, c.cond_d, c.cond_e, c.cond_f, c.cond_g}) {
                flags += b ? 'T' : 'F';
            }
            v.note(e.name + ": (b..g) = " + flags + ", e = " + std::to_string(c.witness_dims.sheaf_dim_e) +
                   ", Der0 + binomial = " +
                   std::to_string(c.witness_dims.der_log0_at_d_minus_2 + c.witness_dims.binomial_term));
        }
    }
    v.check(corpus.size() >= 40, "corpus has at least 40 arrangements (has " + std::to_string(corpus.size()) + ")");
    v.check(mismatched == 0, std::to_string(mismatched) + " of " + std::to_string(corpus.size()) +
                                 " arrangements have disagreeing conditions");
    v.note("ignoring (f): " + std::to_string(without_f) + " disagreements");
    return v;
}

Verdict isolated_formula() {
    Verdict v;
    const auto w = WeightSystem::standard();
    const RootSet q = roots_isolated(milnor_profile(parse_polynomial("x^2+y^2+z^2"), w));
    const RootSet c = roots_isolated(milnor_profile(parse_polynomial("x^3+y^3+z^3"), w));
    v.check(q == RootSet({make_rational(-3, 2), Rational(-1)}), "quadric gives {-3/2, -1}, got " + to_string(q));
    v.check(c == RootSet({Rational(-2), make_rational(-5, 3), make_rational(-4, 3), Rational(-1)}),
            "Fermat cubic gives {-2, -5/3, -4/3, -1}, got " + to_string(c));
    return v;
}

Verdict degree_symmetry(const std::vector<Evaluated>& corpus) {
    Verdict v;
    std::size_t nonempty = 0;
    for (const auto& e : corpus) {
        const auto& h0 = e.report.profile.h0;
        const long d = static_cast<long>(e.arrangement.degree());
        if (h0.empty()) {
            continue;
        }
        ++nonempty;
        const long tau = floor_of(*h0.min_degree()).get_si();
        std::vector<WeightedDegree> interval;
        for (long t = tau; t <= 3 * d - 6 - tau; ++t) {
            interval.emplace_back(t);
        }
        v.check(h0.support() == interval, e.name + ": support " + to_string(h0) + " is not the interval");
        for (const auto& [t, dim] : h0.entries()) {
            v.check(h0.at(3 * d - 6 - t) == dim, e.name + ": dims not symmetric at " + to_string(t));
        }
    }
    v.note(std::to_string(nonempty) + " arrangements with nonzero H0; the rest have empty support");
    return v;
}

Verdict partial_symmetry(const std::vector<Evaluated>& corpus) {
    Verdict v;
    for (const auto& e : corpus) {
        const auto s = check_partial_symmetry(e.report.full_zero_set, xi_set(e.report.profile).xi_set);
        v.check(s.asymmetric_outside_xi.empty(), e.name + ": " + to_string(s.asymmetric_outside_xi));
    }
    return v;
}

Verdict containment(const std::vector<Evaluated>& corpus) {
    Verdict v;
    for (const auto& e : corpus) {
        const auto& zeros = e.report.full_zero_set;
        v.check(new_roots(e.report.profile).is_subset_of(zeros), e.name + ": new roots not contained");
        const RootSet window = zeros.filter([](const Rational& r) { return r > -3 && r <= -2; });
        v.check(small_roots(e.report.profile) == window, e.name + ": small roots " +
                                                             to_string(small_roots(e.report.profile)) + " vs " +
                                                             to_string(window));
    }
    return v;
}

Verdict taxonomy_reconstruction(const std::vector<Evaluated>& corpus) {
    Verdict v;
    std::size_t empty_h0 = 0;
    for (const auto& e : corpus) {
        const auto& zeros = e.report.full_zero_set;
        const RootSet interval = zeros.filter([](const Rational& r) { return r >= -1 && r < 0; });
        RootSet rebuilt;
        if (e.report.profile.h0.empty()) {
            // tau is undefined; the guaranteed part is empty.
            ++empty_h0;
            rebuilt = reconstruct_zero_set(RootSet{}, interval);
        } else {
            rebuilt = homogeneous_taxonomy(e.report.profile, interval).reconstruction;
        }
        v.check(rebuilt == zeros, e.name + ": rebuilt " + to_string(rebuilt) + " vs " + to_string(zeros));
    }
    v.note(std::to_string(empty_h0) + " arrangements with empty H0 rebuilt from an empty guaranteed set");
    return v;
}

Verdict oracle_equivalence() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> count(1, 3), degree(1, 5), coeff(-4, 4), pct(0, 99);
    const auto w = WeightSystem::standard();
    std::size_t comparisons = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Polynomial> gens;
        const int k = count(rng);
        while (static_cast<int>(gens.size()) < k) {
            Polynomial p(3);
            for (const auto& m : monomials_of_weighted_degree(w, degree(rng))) {
                if (pct(rng) < 35) {
                    p += Polynomial::term(m, coeff(rng));
                }
            }
            if (!p.is_zero()) {
                gens.push_back(p);
            }
        }
        const Ideal ideal(gens, 3);
        const auto gb = buchberger(ideal, weighted_grevlex(w));
        for (long q = 0; q <= 8; ++q) {
            ++comparisons;
            const auto a = graded_dimension(gb, w, q);
            const auto b = graded_dimension(ideal, w, q);
            if (a != b) {
                v.check(false, "ideal " + std::to_string(trial) + " degree " + std::to_string(q) + ": " +
                                   std::to_string(a) + " vs " + std::to_string(b));
            }
        }
    }
    const double t = seconds_since(t0);
    v.check(t < 60, "runtime under 60 s");
    std::ostringstream n;
    n.precision(3);
    n << comparisons << " comparisons over degrees 0..8 in " << t << " s";
    v.note(n.str());
    return v;
}

Verdict generic_corroboration() {
    Verdict v;
    for (const auto* forms : {&corpus::kGeneric4, &corpus::kGeneric5}) {
        const auto a = validate(parse_forms(*forms));
        const long d = static_cast<long>(a.degree());
        v.check(corpus::no_three_concurrent(a), *forms + " is in general position");
        RootSet expected{Rational(-1)};
        for (long j = 3; j <= 2 * d - 2; ++j) {
            expected.insert(make_rational(-j, d));
        }
        const auto r = full_root_report(a);
        v.check(r.conditions.cond_b, *forms + ": condition (b) holds");
        v.check(r.full_zero_set == expected, *forms + ": " + to_string(r.full_zero_set) + " vs " + to_string(expected));
    }
    return v;
}

}  // namespace

int main() {
    try {
        report(1, "Ziegler pair reproduction", ziegler_pair());
        const auto corpus = evaluate_corpus();
        report(2, "condition equivalence (b)-(g) on the corpus", condition_equivalence(corpus));
        report(3, "isolated formula", isolated_formula());
        report(4, "degree symmetry and interval structure of H0", degree_symmetry(corpus));
        report(5, "partial symmetry outside Xi", partial_symmetry(corpus));
        report(6, "new roots and small roots containment", containment(corpus));
        report(7, "taxonomy reconstruction", taxonomy_reconstruction(corpus));
        report(8, "graded dimension oracle equivalence", oracle_equivalence());
        report(9, "generic arrangements d = 4, 5", generic_corroboration());
    } catch (const std::exception& e) {
        std::cout << "ERROR " << e.what() << "\n";
        return 1;
    }
    std::cout << (9 - failures) << " of 9 criteria pass\n";
    return 0;
}

#ifndef BS3_REPORT_HPP
#define BS3_REPORT_HPP

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bs3/arrangement.hpp"
#include "bs3/bsroots.hpp"
#include "bs3/milnor.hpp"
#include "bs3/parse.hpp"

namespace bs3 {

using Json = nlohmann::ordered_json;

/// Report document. Key order is fixed by construction so serialization is byte-stable.
/// `elapsed_seconds` is the only nondeterministic field and is always emitted last.
struct Report {
    Json body;
    double elapsed_seconds = 0.0;
};

namespace detail {

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const RootSet& roots) {
    Json out = Json::array();
    for (const auto& r : roots) {
        out.push_back(to_string(r));
    }
    return out;
}

inline Json to_json(const DegreeData& data) {
    Json out = Json::object();
    for (const auto& [q, dim] : data.entries()) {
        out[to_string(q)] = dim;
    }
    return out;
}

inline Json to_json(const WeightSystem& w) {
    Json out = Json::array();
    for (const auto& v : w.weights()) {
        out.push_back(to_string(v));
    }
    return out;
}

inline Json profile_json(const MilnorProfile& p) {
    Json out = Json::object();
    out["f"] = to_string(p.f);
    out["wdeg"] = to_json(p.wdeg_f);
    out["is_isolated"] = p.is_isolated;
    out["h0"] = to_json(p.h0);
    if (p.milnor_algebra_degrees) {
        out["milnor_algebra_degrees"] = to_json(*p.milnor_algebra_degrees);
    }
    return out;
}

template <class Body>
Report timed(Body&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    r.body = body();
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace detail

/// Parses "w1,w2,w3" into positive rational weights.
inline WeightSystem parse_weights(std::string_view csv) {
    std::vector<Rational> w;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = csv.find(',', start);
        const auto part = csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start);
        try {
            w.push_back(parse_rational(part));
        } catch (const ParseError& e) {
            throw ParseError(e.detail(), start + e.position());
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (w.size() != 3) {
        throw ParseError("expected 3 weights", 0);
    }
    return WeightSystem(std::move(w));
}

inline Report cmd_milnor(const std::string& poly, const WeightSystem& w, const Limits& limits = {}) {
    return detail::timed([&] {
        const MilnorProfile p = milnor_profile(parse_polynomial(poly), w, limits);
        Json out = Json::object();
        out["command"] = "milnor";
        out["input"] = {{"poly", poly}, {"weights", detail::to_json(w)}};
        out["profile"] = detail::profile_json(p);
        out["blf_roots"] = detail::to_json(blf_roots(p));
        out["assertions"] = Json::array();
        return out;
    });
}

enum class RootsKind { isolated, lqh };

inline Report cmd_roots(RootsKind kind, const std::string& poly, const WeightSystem& w,
                        const std::optional<Rational>& lambda, const Limits& limits = {}) {
    return detail::timed([&] {
        const MilnorProfile p = milnor_profile(parse_polynomial(poly), w, limits);
        Json out = Json::object();
        out["command"] = kind == RootsKind::isolated ? "roots isolated" : "roots lqh";
        out["input"] = {{"poly", poly}, {"weights", detail::to_json(w)}};
        if (lambda) {
            out["input"]["lct_lambda"] = to_string(*lambda);
        }
        out["profile"] = detail::profile_json(p);
        Json assertions = Json::array();
        if (kind == RootsKind::isolated) {
            out["roots"] = detail::to_json(roots_isolated(p));
        } else {
            assertions.push_back("f is locally quasi-homogeneous (not verified)");
            out["new_roots"] = detail::to_json(new_roots(p));
            out["xi"] = detail::to_json(xi_set(p).xi_set);
            out["small_roots"] = detail::to_json(small_roots(p));
            if (w.is_standard() && !p.h0.empty()) {
                const HomogeneousTaxonomy t = homogeneous_taxonomy(p, RootSet{});
                out["taxonomy"] = {{"tau", t.tau},
                                   {"upsilon", detail::to_json(t.upsilon)},
                                   {"window_small", detail::to_json(t.window_small)}};
            }
        }
        if (lambda) {
            out["tlct"] = tlct_holds(p, *lambda);
        }
        out["assertions"] = std::move(assertions);
        return out;
    });
}

inline Report cmd_arrangement(const std::string& forms, const Limits& limits = {}) {
    return detail::timed([&] {
        const Arrangement a = validate(parse_forms(forms));
        const ArrangementRootReport r = full_root_report(a, limits);
        Json out = Json::object();
        out["command"] = "arrangement";
        Json canonical = Json::array();
        for (const auto& l : a.forms()) {
            canonical.push_back(to_string(l));
        }
        out["input"] = {{"forms", forms}, {"canonical_forms", canonical}};
        out["degree"] = a.degree();
        Json points = Json::array();
        for (const auto& z : r.singular_points) {
            points.push_back({{"point", to_string(z)}, {"multiplicity", z.multiplicity}});
        }
        out["singular_points"] = std::move(points);
        out["h0"] = detail::to_json(r.profile.h0);
        out["comb_roots"] = detail::to_json(r.comb_roots);
        out["non_comb_root"] = detail::to_json(r.non_comb_root);
        out["non_comb_present"] = r.non_comb_present;
        const auto& c = r.conditions;
        out["conditions"] = {{"b", c.cond_b}, {"c", c.cond_c}, {"d", c.cond_d},
                             {"e", c.cond_e}, {"f", c.cond_f}, {"g", c.cond_g}};
        out["consistent"] = c.consistent;
        const auto& wd = c.witness_dims;
        out["witness_dims"] = {{"h0_at_d_minus_1", wd.h0_at_d_minus_1},
                               {"h0_at_2d_minus_5", wd.h0_at_2d_minus_5},
                               {"regularity", wd.regularity},
                               {"sheaf_dim_e", wd.sheaf_dim_e},
                               {"milnor_dim_at_2d_minus_5", wd.milnor_dim_at_2d_minus_5},
                               {"milnor_dim_at_d_minus_1", wd.milnor_dim_at_d_minus_1},
                               {"der_log0_at_d_minus_2", wd.der_log0_at_d_minus_2},
                               {"binomial_term", wd.binomial_term},
                               {"h1_at_d_minus_1", wd.h1_at_d_minus_1},
                               {"gamma_at_d_minus_1", wd.gamma_at_d_minus_1},
                               {"gamma_at_2d_minus_5", wd.gamma_at_2d_minus_5},
                               {"relation_space_dim", wd.relation_space_dim},
                               {"length_three_span_dim", wd.length_three_span_dim}};
        out["full_zero_set"] = detail::to_json(r.full_zero_set);
        Json assertions = Json::array();
        assertions.push_back("arrangements are locally quasi-homogeneous");
        out["assertions"] = std::move(assertions);
        return out;
    });
}

inline std::string to_json_string(const Report& r) {
    Json doc = r.body;
    doc["elapsed_seconds"] = r.elapsed_seconds;
    return doc.dump(2) + "\n";
}

namespace detail {

inline std::string scalar_text(const Json& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

inline void flatten(const Json& v, const std::string& path, std::string& out) {
    if (v.is_object()) {
        const bool leaf_map = !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
        // Small degree tables read better inline.
        if (leaf_map && path.size() >= 2 && (path.substr(path.size() - 2) == "h0" || path.find("degrees") != path.npos)) {
            out += path + ": {";
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                out += (first ? "" : ", ") + it.key() + ":" + scalar_text(it.value());
                first = false;
            }
            out += "}\n";
            return;
        }
        if (v.empty()) {
            out += path + ": {}\n";
        }
        for (auto it = v.begin(); it != v.end(); ++it) {
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
        }
    } else if (v.is_array()) {
        if (std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); })) {
            out += path + ": [";
            for (std::size_t i = 0; i < v.size(); ++i) {
                out += (i ? ", " : "") + scalar_text(v[i]);
            }
            out += "]\n";
            return;
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
            flatten(v[i], path + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out += path + ": " + scalar_text(v) + "\n";
    }
}

}  // namespace detail

/// One "key.path: value" line per JSON leaf, in document order.
inline std::string to_text(const Report& r) {
    std::string out;
    detail::flatten(r.body, "", out);
    char buf[64];
    std::snprintf(buf, sizeof buf, "elapsed_seconds: %.3f\n", r.elapsed_seconds);
    return out + buf;
}

}  // namespace bs3

#endif  // BS3_REPORT_HPP

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bs3/report.hpp"

namespace {

enum Exit { ok = 0, usage = 1, precondition = 2, resource = 3, internal = 4 };

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernstein-Sato zero sets for quasi-homogeneous and arrangement polynomials in 3 variables"};
    app.require_subcommand(1);

    std::string poly;
    std::string weights = "1,1,1";
    std::string forms;
    std::string lambda;
    std::string format = "text";
    std::size_t step_cap = bs3::Limits{}.step_cap;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--step-cap", step_cap, "Buchberger step limit");
    };

    auto* milnor = app.add_subcommand("milnor", "Milnor algebra, H0 table and B(L_f) roots");
    milnor->add_option("--poly", poly, "quasi-homogeneous polynomial")->required();
    milnor->add_option("--weights", weights, "w1,w2,w3 (default 1,1,1)");
    add_common(milnor);

    auto* roots = app.add_subcommand("roots", "zero sets from the H0 data");
    roots->require_subcommand(1);
    auto* isolated = roots->add_subcommand("isolated", "isolated quasi-homogeneous singularity");
    auto* lqh = roots->add_subcommand("lqh", "locally quasi-homogeneous, assumed not checked");
    for (auto* sub : {isolated, lqh}) {
        sub->add_option("--poly", poly, "quasi-homogeneous polynomial")->required();
        sub->add_option("--weights", weights, "w1,w2,w3 (default 1,1,1)");
        sub->add_option("--lct-lambda", lambda, "run the twisted comparison test at p/q <= 0");
        add_common(sub);
    }

    auto* arrangement = app.add_subcommand("arrangement", "full zero set of a line arrangement");
    arrangement->add_option("--forms", forms, "comma-separated linear forms")->required();
    add_common(arrangement);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? ok : usage;
    }

    try {
        const bs3::Limits limits{step_cap};
        bs3::Report report;
        if (milnor->parsed()) {
            report = bs3::cmd_milnor(poly, bs3::parse_weights(weights), limits);
        } else if (arrangement->parsed()) {
            report = bs3::cmd_arrangement(forms, limits);
        } else {
            std::optional<bs3::Rational> lct;
            if (!lambda.empty()) {
                lct = bs3::parse_rational(lambda);
            }
            const auto kind = isolated->parsed() ? bs3::RootsKind::isolated : bs3::RootsKind::lqh;
            report = bs3::cmd_roots(kind, poly, bs3::parse_weights(weights), lct, limits);
        }
        std::cout << (format == "json" ? bs3::to_json_string(report) : bs3::to_text(report));
        return ok;
    } catch (const bs3::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const bs3::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return precondition;
    } catch (const bs3::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return resource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal;
    }
}

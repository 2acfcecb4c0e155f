// dp1: command-line front end for the degree-1 del Pezzo lattice library.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "dp1/checks.hpp"
#include "dp1/io.hpp"

namespace {

using namespace dp1;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    bool json = false;
    std::size_t cap = kDefaultClosureCap;
    std::string element;
    std::string lemma;
    std::vector<std::string> g_specs;
    std::vector<std::string> gamma_specs;
};

GroupSpec load_group(const std::vector<std::string>& specs, const std::string& label) {
    GroupSpec g{{}, label};
    for (const auto& spec : specs) {
        auto part = parse_group(read_file_or_inline(spec));
        g.generators.insert(g.generators.end(), part.generators.begin(), part.generators.end());
    }
    return g;
}

std::string coeffs(const DivisorClass& d) { return to_string(d); }

int list_curves(const Options& o) {
    json arr = json::array();
    for (const auto& c : enumerate_curves()) {
        if (o.json) {
            arr.push_back({{"id", c.id},
                           {"name", curve_name(c.id)},
                           {"family", family_name(c.family)},
                           {"class", c.cls.coeffs}});
        } else {
            std::cout << c.id << '\t' << curve_name(c.id) << '\t' << family_name(c.family) << '\t'
                      << coeffs(c.cls) << '\n';
        }
    }
    if (o.json) std::cout << arr.dump(2) << '\n';
    return kExitOk;
}

int list_roots(const Options& o) {
    const auto& roots = enumerate_roots();
    json arr = json::array();
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (o.json) arr.push_back({{"id", i}, {"class", roots[i].coeffs}});
        else std::cout << i << '\t' << coeffs(roots[i]) << '\n';
    }
    if (o.json) std::cout << arr.dump(2) << '\n';
    return kExitOk;
}

int list_stars(const Options& o) {
    const auto& stars = enumerate_stars();
    if (o.json) {
        json arr = json::array();
        for (const auto& s : stars) arr.push_back(star_json(s));
        std::cout << json{{"count", stars.size()}, {"stars", arr}}.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << stars.size() << " stars\n";
    for (std::size_t i = 0; i < stars.size(); ++i) std::cout << i << '\t' << format_star(stars[i]) << '\n';
    return kExitOk;
}

int classify_element(const Options& o) {
    const auto g = parse_element(read_file_or_inline(o.element));
    const int order = element_order(g);
    const int rank = fixed_rank(g);
    std::optional<CarterType3> type;
    if (order == 3) type = carter_type_order3(g);
    if (o.json) {
        std::cout << json{{"element", element_json(g)},
                          {"order", order},
                          {"fixed_rank", rank},
                          {"carter_type", type ? json(tag(*type)) : json(nullptr)}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "order " << order << ", rank " << rank;
        if (type) std::cout << ", type " << display_name(*type);
        std::cout << '\n';
    }
    return kExitOk;
}

int census(const Options& o) {
    const auto g = parse_element(read_file_or_inline(o.element));
    const auto curves = invariant_curves(g);
    const auto actions = invariant_stars(g);
    std::vector<StarConfiguration> trivial, faithful, all;
    for (const auto& a : actions) {
        (a.kind == StarActionKind::Trivial ? trivial : faithful).push_back(a.star);
        all.push_back(a.star);
    }
    std::array<long, 3> types{};
    long overlapping = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            bool matched = false;
            for (auto t : kPairTypes)
                if (matches_pattern(all[i], all[j], t)) {
                    ++types[static_cast<std::size_t>(t)];
                    matched = true;
                    break;
                }
            if (!matched) ++overlapping;
        }

    if (o.json) {
        json names = json::array(), ts = json::array(), fs = json::array();
        for (CurveId c : curves) names.push_back(curve_name(c));
        for (const auto& s : trivial) ts.push_back(format_star(s));
        for (const auto& s : faithful) fs.push_back(format_star(s));
        std::cout << json{{"element", element_json(g)},
                          {"invariant_curves", names},
                          {"trivial_stars", ts},
                          {"faithful_stars", fs},
                          {"pair_types",
                           {{"Asynchronized", types[0]},
                            {"Synchronized", types[1]},
                            {"Abnormal", types[2]},
                            {"overlapping", overlapping}}}}
                         .dump(2)
                  << '\n';
        return kExitOk;
    }
    std::cout << "invariant curves: " << curves.size() << '\n';
    if (!curves.empty()) {
        std::cout << ' ';
        for (CurveId c : curves) std::cout << ' ' << curve_name(c);
        std::cout << '\n';
    }
    std::cout << "trivial stars: " << trivial.size() << '\n';
    for (const auto& s : trivial) std::cout << "  " << format_star(s) << '\n';
    std::cout << "faithful stars: " << faithful.size() << '\n';
    for (const auto& s : faithful) std::cout << "  " << format_star(s) << '\n';
    std::cout << "pairwise types: " << types[0] << " asynchronized, " << types[1] << " synchronized, " << types[2]
              << " abnormal, " << overlapping << " overlapping\n";
    return kExitOk;
}

int verify_lemma(const Options& o) {
    const auto& names = check_names();
    if (std::find(names.begin(), names.end(), o.lemma) == names.end()) {
        std::cerr << "unknown lemma '" << o.lemma << "'; known:";
        for (auto n : names) std::cerr << ' ' << n;
        std::cerr << '\n';
        return kExitUsage;
    }
    const auto r = run_check(o.lemma);
    if (o.json) std::cout << json{{"lemma", o.lemma}, {"ok", r.ok}, {"message", r.message}}.dump(2) << '\n';
    else std::cout << (r.ok ? "" : "FAILED: ") << r.message << '\n';
    return r.ok ? kExitOk : kExitCheckFailed;
}

int report(const Options& o) {
    const ActionSetup setup{load_group(o.g_specs, "G"), load_group(o.gamma_specs, "Gamma")};
    try {
        validate_setup(setup);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const auto v = rationality_report(setup, o.cap);
    std::cout << verdict_json(v).dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    // Accept the single-dash spelling "-gamma".
    std::vector<std::string> args(argv, argv + argc);
    for (auto& a : args)
        if (a == "-gamma") a = "--gamma";
    std::vector<char*> argp;
    for (auto& a : args) argp.push_back(a.data());

    CLI::App app{"Exact lattice combinatorics for degree-1 del Pezzo surfaces"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Emit JSON instead of text");
    app.add_option("--cap", o.cap, "Group closure cap")->check(CLI::PositiveNumber);

    auto* lc = app.add_subcommand("list-curves", "The 240 exceptional classes with names and families");
    auto* lr = app.add_subcommand("list-roots", "The 240 roots; indices are used by reflection words");
    auto* ls = app.add_subcommand("list-stars", "All star configurations, count first");
    auto* ce = app.add_subcommand("classify-element", "Order, invariant rank, and order-3 type");
    ce->add_option("-e,--element", o.element, "Element file or inline spec")->required();
    auto* cs = app.add_subcommand("census", "Invariant curves and stars of an element");
    cs->add_option("-e,--element", o.element, "Element file or inline spec")->required();
    auto* vl = app.add_subcommand("verify-lemma", "Replay a named verification");
    vl->add_option("name", o.lemma, "Check name")->required();
    auto* rp = app.add_subcommand("report", "JSON rationality verdict for (G, Gamma)");
    rp->add_option("-g", o.g_specs, "G generators (file or inline; repeatable)");
    rp->add_option("--gamma", o.gamma_specs, "Gamma generators (file or inline; repeatable)");
    for (auto* sub : {lc, lr, ls, ce, cs, vl, rp}) {
        sub->add_flag("--json", o.json, "Emit JSON instead of text");
        sub->add_option("--cap", o.cap, "Group closure cap")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(static_cast<int>(argp.size()), argp.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (lc->parsed()) return list_curves(o);
        if (lr->parsed()) return list_roots(o);
        if (ls->parsed()) return list_stars(o);
        if (ce->parsed()) return classify_element(o);
        if (cs->parsed()) return census(o);
        if (vl->parsed()) return verify_lemma(o);
        if (rp->parsed()) return report(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --cap)\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}

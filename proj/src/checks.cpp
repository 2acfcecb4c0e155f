#include "dp1/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "dp1/io.hpp"

namespace dp1 {

namespace {

CheckResult pass(std::string message) { return {true, std::move(message)}; }
CheckResult failure(std::string message) { return {false, std::move(message)}; }

bool has_order_three(const LatticeIsometry& g) { return !g.is_identity() && (g * g * g).is_identity(); }

std::vector<StarConfiguration> stars_of_kind(const std::vector<StarAction>& actions, StarActionKind kind) {
    std::vector<StarConfiguration> out;
    for (const auto& a : actions)
        if (a.kind == kind) out.push_back(a.star);
    return out;
}

std::set<CurveId> curve_set(std::initializer_list<std::string_view> names) {
    std::set<CurveId> out;
    for (auto n : names) out.insert(parse_curve_name(n));
    return out;
}

std::set<CurveId> curve_set(const StarConfiguration& s) { return {s.curves().begin(), s.curves().end()}; }

CheckResult check_curves() {
    const auto& curves = enumerate_curves();
    if (curves.size() != kCurveCount) return failure("expected 240 curves, got " + std::to_string(curves.size()));
    std::array<int, 7> sizes{};
    for (const auto& c : curves) {
        if (pair(c.cls, c.cls) != -1 || pair(c.cls, DivisorClass::canonical()) != -1)
            return failure("class " + to_string(c.cls) + " is not exceptional");
        ++sizes[static_cast<std::size_t>(c.family)];
    }
    if (sizes != std::array<int, 7>{8, 28, 56, 56, 56, 28, 8}) return failure("family sizes differ");
    std::vector<DivisorClass> formula;
    for (const auto& c : curves) formula.push_back(c.cls);
    if (formula != search_exceptional_classes())
        return failure("closed-form families and the direct search disagree");
    return pass("240 curves; families 8/28/56/56/56/28/8; OK");
}

CheckResult check_a2_a22() {
    const auto g1 = s8_action("(1 2 3)");
    const auto g2 = s8_action("(1 2 3)(4 5 6)");
    if (representative_order3(CarterType3::A2) != g1 || representative_order3(CarterType3::A2x2) != g2)
        return failure("A2 / A2^2 representatives are not the permutations (1 2 3), (1 2 3)(4 5 6)");
    auto e = [](int i) { return DivisorClass::exceptional(i); };
    const std::vector<DivisorClass> fixed1{DivisorClass::line(), e(1) + e(2) + e(3), e(4), e(5), e(6), e(7), e(8)};
    const std::vector<DivisorClass> fixed2{DivisorClass::line(), e(1) + e(2) + e(3), e(4) + e(5) + e(6), e(7), e(8)};
    for (const auto& v : fixed1)
        if (g1(v) != v) return failure(to_string(v) + " is not fixed by (1 2 3)");
    for (const auto& v : fixed2)
        if (g2(v) != v) return failure(to_string(v) + " is not fixed by (1 2 3)(4 5 6)");
    for (auto t : kCarterTypes3) {
        const auto& g = representative_order3(t);
        if (element_order(g) != 3) return failure(std::string(display_name(t)) + " representative is not of order 3");
        if (fixed_rank(g) != invariant_rank(t))
            return failure(std::string(display_name(t)) + " representative has rank " + std::to_string(fixed_rank(g)));
        if (carter_type_order3(g) != t) return failure("type does not round-trip");
    }
    return pass("(1 2 3): rank 7, type A2; (1 2 3)(4 5 6): rank 5, type A2^2; ranks 7/5/3/1; OK");
}

CheckResult check_census() {
    std::ostringstream msg;
    // A2
    {
        const auto& g = representative_order3(CarterType3::A2);
        const auto inv = invariant_curves(g);
        const auto faithful = stars_of_kind(invariant_stars(g), StarActionKind::Faithful);
        if (inv.size() != 72) return failure("A2: " + std::to_string(inv.size()) + " invariant curves");
        if (faithful.size() != 1) return failure("A2: " + std::to_string(faithful.size()) + " faithful stars");
        if (curve_set(faithful[0]) != curve_set({"C1-2", "C3-2", "C3-1", "C2-1", "C2-3", "C1-3"}))
            return failure("A2: faithful star is " + format_star(faithful[0]));
        for (CurveId c : inv)
            if (!std::holds_alternative<AllOnes>(profile(c, faithful[0])))
                return failure("A2: " + curve_name(c) + " does not meet the faithful star once everywhere");
        msg << "A2: 72 curves, 1 faithful star";
    }
    // A2^2
    {
        const auto& g = representative_order3(CarterType3::A2x2);
        const auto actions = invariant_stars(g);
        const auto inv = invariant_curves(g);
        const auto trivial = stars_of_kind(actions, StarActionKind::Trivial);
        const auto faithful = stars_of_kind(actions, StarActionKind::Faithful);
        if (inv.size() != 12 || trivial.size() != 2 || faithful.size() != 2)
            return failure("A2^2: census " + std::to_string(inv.size()) + "/" + std::to_string(trivial.size()) +
                           "/" + std::to_string(faithful.size()));
        std::set<CurveId> covered;
        for (const auto& s : trivial) covered.merge(curve_set(s));
        if (covered != std::set<CurveId>(inv.begin(), inv.end()))
            return failure("A2^2: invariant curves do not form the two fixed stars");
        std::vector<StarConfiguration> four = trivial;
        four.insert(four.end(), faithful.begin(), faithful.end());
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (classify_pair(four[i], four[j]) != PairType::Asynchronized)
                    return failure("A2^2: stars " + format_star(four[i]) + " and " + format_star(four[j]) +
                                   " are not asynchronized");
        msg << "; A2^2: 12 curves, 2 fixed + 2 faithful stars, pairwise asynchronized";
    }
    // A2^3
    {
        const auto& g = representative_order3(CarterType3::A2x3);
        const auto actions = invariant_stars(g);
        const auto inv = invariant_curves(g);
        const auto trivial = stars_of_kind(actions, StarActionKind::Trivial);
        const auto faithful = stars_of_kind(actions, StarActionKind::Faithful);
        if (inv.size() != 6 || trivial.size() != 1 || faithful.size() != 12)
            return failure("A2^3: census " + std::to_string(inv.size()) + "/" + std::to_string(trivial.size()) +
                           "/" + std::to_string(faithful.size()));
        if (curve_set(trivial[0]) != std::set<CurveId>(inv.begin(), inv.end()))
            return failure("A2^3: invariant curves do not form the fixed star");
        for (const auto& s : faithful)
            if (classify_pair(s, trivial[0]) != PairType::Asynchronized)
                return failure("A2^3: " + format_star(s) + " is not asynchronized with the fixed star");
        msg << "; A2^3: 6 curves, 1 fixed + 12 faithful stars";
    }
    // A2^4
    {
        const auto& g = representative_order3(CarterType3::A2x4);
        const auto actions = invariant_stars(g);
        const auto inv = invariant_curves(g);
        const auto faithful = stars_of_kind(actions, StarActionKind::Faithful);
        if (!inv.empty() || faithful.size() != 40 || actions.size() != 40)
            return failure("A2^4: census " + std::to_string(inv.size()) + "/" + std::to_string(faithful.size()));
        msg << "; A2^4: 0 curves, 40 faithful stars; OK";
    }
    return pass(msg.str());
}

CheckResult check_intersection() {
    long all_ones = 0, touching = 0;
    for (const auto& s : enumerate_stars())
        for (CurveId a = 0; a < kCurveCount; ++a) {
            if (s.contains(a)) continue;
            try {
                if (std::holds_alternative<AllOnes>(profile(a, s))) ++all_ones;
                else ++touching;
            } catch (const InvariantViolation&) {
                return failure(curve_name(a) + " against " + format_star(s) + " fits neither shape");
            }
        }
    return pass(std::to_string(all_ones + touching) + " incidences: " + std::to_string(all_ones) +
                " all-ones, " + std::to_string(touching) + " touching; OK");
}

CheckResult check_trichotomy() {
    const auto& stars = enumerate_stars();
    std::array<long, 3> counts{};
    long overlapping = 0;
    for (std::size_t i = 0; i < stars.size(); ++i)
        for (std::size_t j = i + 1; j < stars.size(); ++j) {
            std::vector<CurveId> shared;
            for (CurveId c : stars[i].curves())
                if (stars[j].contains(c)) shared.push_back(c);
            if (!shared.empty()) {
                // Overlapping stars share exactly one Bertini pair and fall
                // outside the three patterns.
                if (shared.size() != 2 || bertini(shared[0]) != shared[1])
                    return failure(format_star(stars[i]) + " and " + format_star(stars[j]) +
                                   " overlap in an unexpected way");
                ++overlapping;
                continue;
            }
            try {
                ++counts[static_cast<std::size_t>(classify_pair(stars[i], stars[j]))];
            } catch (const InvariantViolation& e) {
                return failure(format_star(stars[i]) + " and " + format_star(stars[j]) + ": " + e.what());
            }
        }
    return pass(std::to_string(counts[0] + counts[1] + counts[2]) + " curve-disjoint pairs: " +
                std::to_string(counts[0]) + " asynchronized, " + std::to_string(counts[1]) + " synchronized, " +
                std::to_string(counts[2]) + " abnormal; " + std::to_string(overlapping) +
                " pairs sharing a Bertini pair excluded; OK");
}

CheckResult check_automorphisms() {
    const auto& stars = enumerate_stars();
    if (star_graph_automorphisms(std::span(&stars[0], 1)) != 12) return failure("single star: order is not 12");
    const std::map<PairType, std::uint64_t> expected{
        {PairType::Asynchronized, 288}, {PairType::Synchronized, 24}, {PairType::Abnormal, 16}};
    std::map<PairType, int> sampled;
    for (std::size_t i = 0; i < stars.size() && sampled.size() < 3; i += 37)
        for (std::size_t j = i + 1; j < stars.size(); j += 13) {
            if (std::any_of(stars[i].curves().begin(), stars[i].curves().end(),
                            [&](CurveId c) { return stars[j].contains(c); }))
                continue;
            const auto t = classify_pair(stars[i], stars[j]);
            if (sampled[t] >= 10) continue;
            const std::array<StarConfiguration, 2> two{stars[i], stars[j]};
            const auto order = star_graph_automorphisms(two);
            if (order != expected.at(t))
                return failure(std::string(pair_type_name(t)) + " pair has automorphism order " +
                               std::to_string(order));
            ++sampled[t];
        }
    for (auto t : kPairTypes)
        if (sampled[t] < 10) return failure("too few " + std::string(pair_type_name(t)) + " samples");

    // An order-3 element preserving two stars, faithful on one of them, never
    // leaves them abnormal.
    for (auto t : kCarterTypes3) {
        const auto actions = invariant_stars(representative_order3(t));
        for (std::size_t i = 0; i < actions.size(); ++i)
            for (std::size_t j = i + 1; j < actions.size(); ++j) {
                if (actions[i].kind != StarActionKind::Faithful && actions[j].kind != StarActionKind::Faithful)
                    continue;
                if (matches_pattern(actions[i].star, actions[j].star, PairType::Abnormal))
                    return failure(std::string(display_name(t)) + ": invariant stars " +
                                   format_star(actions[i].star) + " and " + format_star(actions[j].star) +
                                   " are abnormal");
            }
    }
    return pass("orders 12 / 288 / 24 / 16 on 1 + 3x10 samples; order-3 invariant pairs never abnormal; OK");
}

CheckResult check_minimal(const ActionSetup& setup, const std::string& label) {
    auto cert = check_minimal_four_stars(setup);
    if (!cert) return failure(label + ": no four-star certificate");
    std::string why;
    if (!replay(*cert, setup, &why)) return failure(label + ": certificate does not replay: " + why);
    std::vector<LatticeIsometry> all = setup.g_group.generators;
    all.insert(all.end(), setup.gamma_group.generators.begin(), setup.gamma_group.generators.end());
    const int rank = fixed_rank(std::span<const LatticeIsometry>(all));
    if (rank != 1) return failure(label + ": invariant rank " + std::to_string(rank));
    return pass(label + ": four pairwise asynchronized invariant stars, invariant rank 1; OK");
}

CheckResult check_ratcor() {
    const auto& stars = enumerate_stars();
    long pairs = 0;
    for (std::size_t i = 0; i < stars.size(); ++i)
        for (std::size_t j = i + 1; j < stars.size(); ++j) {
            if (!matches_pattern(stars[i], stars[j], PairType::Asynchronized)) continue;
            ++pairs;
            // A from the first star, B from the second, C next to A.
            const CurveId a = stars[i][0], b = stars[j][0], c = stars[i][1];
            Witness w{std::string(rule::kRationalTriple), {}, {}, {a, b, c}, {}};
            if (!replay(w)) return failure("no triple in " + format_star(stars[i]) + " + " + format_star(stars[j]));
        }
    for (auto t : kCarterTypes3) {
        const GroupSpec gamma{{representative_order3(t)}, std::string(tag(t))};
        if (check_rational_two_stars(gamma) && !check_rational_triple(gamma))
            return failure(std::string(display_name(t)) + ": two-star witness without a triple");
    }
    if (!check_rational_two_stars(GroupSpec::trivial()) || !check_rational_triple(GroupSpec::trivial()))
        return failure("trivial group: missing rational witness");
    return pass(std::to_string(pairs) + " asynchronized pairs each contain a (1, 1, 0) triple; OK");
}

}  // namespace

const std::vector<std::string_view>& check_names() {
    static const std::vector<std::string_view> names{"DP1lines",   "A2A22",    "Davidinv",  "Davidintersection",
                                                     "2Daviddef",  "Davidauto", "Davidmin", "Davidmin1",
                                                     "Davidmin2",  "RatCor-consistency"};
    return names;
}

CheckResult run_check(std::string_view name) {
    if (name == "DP1lines") return check_curves();
    if (name == "A2A22") return check_a2_a22();
    if (name == "Davidinv") return check_census();
    if (name == "Davidintersection") return check_intersection();
    if (name == "2Daviddef") return check_trichotomy();
    if (name == "Davidauto") return check_automorphisms();
    if (name == "Davidmin")
        return check_minimal({GroupSpec{{representative_order3(CarterType3::A2x4)}, "A2x4"}, GroupSpec::trivial()},
                             "A2^4");
    if (name == "Davidmin1") return check_minimal(minimality_setup_a2x3(), "A2^3 + h");
    if (name == "Davidmin2") return check_minimal(minimality_setup_a2x2(), "A2^2 + h");
    if (name == "RatCor-consistency") return check_ratcor();
    throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

std::vector<LatticeIsometry> commuting_order3_candidates(const LatticeIsometry& g) {
    const auto& roots = enumerate_roots();
    std::vector<LatticeIsometry> singles;
    std::unordered_set<LatticeIsometry, IsometryHash> seen;
    for (int a = 0; a < kRootCount; ++a)
        for (int b = a + 1; b < kRootCount; ++b) {
            if (pair(roots[a], roots[b]) != 1) continue;
            auto h = a2_rotation(roots[a], roots[b]);
            if (commute(g, h) && seen.insert(h).second) singles.push_back(std::move(h));
        }
    std::vector<LatticeIsometry> out = singles;
    for (std::size_t i = 0; i < singles.size(); ++i)
        for (std::size_t j = i + 1; j < singles.size(); ++j) {
            if (!commute(singles[i], singles[j])) continue;
            auto h = singles[i] * singles[j];
            if (has_order_three(h) && seen.insert(h).second) out.push_back(std::move(h));
        }
    return out;
}

namespace {

ActionSetup minimality_setup(CarterType3 type, const std::function<bool(const LatticeIsometry&)>& accept) {
    const auto& g = representative_order3(type);
    for (const auto& h : commuting_order3_candidates(g))
        if (accept(h))
            return {GroupSpec{{g, h}, "<" + std::string(tag(type)) + ", h>"}, GroupSpec::trivial()};
    throw InvariantViolation("no commuting order-3 element found for " + std::string(tag(type)));
}

}  // namespace

ActionSetup minimality_setup_a2x3() {
    const auto fixed = invariant_curves(representative_order3(CarterType3::A2x3));
    return minimality_setup(CarterType3::A2x3, [&](const LatticeIsometry& h) {
        const auto perm = curve_permutation(h);
        return std::any_of(fixed.begin(), fixed.end(), [&](CurveId c) { return perm[c] != c; });
    });
}

ActionSetup minimality_setup_a2x2() {
    const auto fixed_stars =
        stars_of_kind(invariant_stars(representative_order3(CarterType3::A2x2)), StarActionKind::Trivial);
    return minimality_setup(CarterType3::A2x2, [&](const LatticeIsometry& h) {
        const auto perm = curve_permutation(h);
        return std::all_of(fixed_stars.begin(), fixed_stars.end(), [&](const StarConfiguration& s) {
            const auto image = map_star(s, perm);
            return image == s && std::any_of(s.curves().begin(), s.curves().end(),
                                             [&](CurveId c) { return perm[c] != c; });
        });
    });
}

}  // namespace dp1

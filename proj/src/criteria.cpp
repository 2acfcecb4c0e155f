#include "dp1/criteria.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp1 {

namespace {

bool has_order_three(const LatticeIsometry& g) { return !g.is_identity() && (g * g * g).is_identity(); }

std::vector<CurveId> fixed_curves(std::span<const LatticeIsometry> elements) {
    std::vector<bool> fixed(kCurveCount, true);
    for (const auto& g : elements) {
        const auto perm = curve_permutation(g);
        for (CurveId c = 0; c < kCurveCount; ++c) fixed[c] = fixed[c] && perm[c] == c;
    }
    std::vector<CurveId> out;
    for (CurveId c = 0; c < kCurveCount; ++c)
        if (fixed[c]) out.push_back(c);
    return out;
}

std::vector<StarConfiguration> pointwise_fixed_stars(const std::vector<CurveId>& fixed) {
    std::vector<bool> is_fixed(kCurveCount, false);
    for (CurveId c : fixed) is_fixed[c] = true;
    std::vector<StarConfiguration> out;
    for (const auto& s : enumerate_stars())
        if (std::all_of(s.curves().begin(), s.curves().end(), [&](CurveId c) { return is_fixed[c]; }))
            out.push_back(s);
    return out;
}

bool all_ones(const StarConfiguration& a, const StarConfiguration& b) {
    for (CurveId x : a.curves())
        for (CurveId y : b.curves())
            if (curve_pairing(x, y) != 1) return false;
    return true;
}

bool setwise_invariant(const StarConfiguration& s, const std::array<CurveId, kCurveCount>& perm) {
    return std::all_of(s.curves().begin(), s.curves().end(), [&](CurveId c) { return s.contains(perm[c]); });
}

bool moves_some_member(const StarConfiguration& s, const std::array<CurveId, kCurveCount>& perm) {
    return std::any_of(s.curves().begin(), s.curves().end(), [&](CurveId c) { return perm[c] != c; });
}

bool in_closure(const LatticeIsometry& g, const std::vector<LatticeIsometry>& generators) {
    const auto closure = group_closure({generators, ""});
    return std::find(closure.begin(), closure.end(), g) != closure.end();
}

bool fail(std::string* why, std::string message) {
    if (why) *why = std::move(message);
    return false;
}

}  // namespace

void validate_setup(const ActionSetup& setup) {
    for (const auto& g : setup.g_group.generators)
        for (const auto& h : setup.gamma_group.generators)
            if (!commute(g, h)) throw std::invalid_argument("G and Gamma generators do not commute");
}

std::optional<Witness> check_not_rational_carter(const GroupSpec& gamma, std::size_t cap) {
    for (const auto& g : group_closure(gamma, cap)) {
        if (!has_order_three(g)) continue;
        const auto t = carter_type_order3(g);
        if (t == CarterType3::A2x3 || t == CarterType3::A2x4)
            return Witness{std::string(rule::kNotRationalCarter), gamma.generators, {g}, {}, {}};
    }
    return std::nullopt;
}

std::optional<Witness> check_not_rational_stars(const GroupSpec& gamma, std::size_t cap) {
    for (const auto& g : group_closure(gamma, cap)) {
        if (!has_order_three(g)) continue;
        std::vector<StarConfiguration> faithful;
        for (const auto& a : invariant_stars(g))
            if (a.kind == StarActionKind::Faithful) faithful.push_back(a.star);
        if (faithful.size() >= 3) {
            faithful.erase(faithful.begin() + 3, faithful.end());
            return Witness{std::string(rule::kNotRationalStars), gamma.generators, {g}, {}, faithful};
        }
    }
    return std::nullopt;
}

std::optional<Witness> check_not_rational_even(const GroupSpec& gamma, std::size_t cap) {
    for (const auto& g : group_closure(gamma, cap)) {
        if (element_order(g) % 2 != 0) continue;
        const auto perm = curve_permutation(g);
        for (const auto& a : invariant_stars(g)) {
            if (a.kind != StarActionKind::Faithful) continue;
            const auto& members = a.star.curves();
            if (std::all_of(members.begin(), members.end(),
                            [&](CurveId h) { return curve_pairing(h, perm[h]) == 3; }))
                return Witness{std::string(rule::kNotRationalEven), gamma.generators, {g}, {}, {a.star}};
        }
    }
    return std::nullopt;
}

std::optional<Witness> check_rational_triple(const GroupSpec& gamma, std::size_t cap) {
    const auto closure = group_closure(gamma, cap);
    const auto fixed = fixed_curves(closure);
    for (CurveId b : fixed)
        for (CurveId a : fixed) {
            if (curve_pairing(a, b) != 1) continue;
            for (CurveId c : fixed)
                if (c != a && curve_pairing(b, c) == 1 && curve_pairing(a, c) == 0)
                    return Witness{std::string(rule::kRationalTriple), gamma.generators, {}, {a, b, c}, {}};
        }
    return std::nullopt;
}

std::optional<Witness> check_rational_two_stars(const GroupSpec& gamma, std::size_t cap) {
    const auto closure = group_closure(gamma, cap);
    const auto stars = pointwise_fixed_stars(fixed_curves(closure));
    for (std::size_t i = 0; i < stars.size(); ++i)
        for (std::size_t j = i + 1; j < stars.size(); ++j)
            if (matches_pattern(stars[i], stars[j], PairType::Asynchronized))
                return Witness{std::string(rule::kRationalTwoStars), gamma.generators, {}, {}, {stars[i], stars[j]}};
    return std::nullopt;
}

std::optional<MinimalityCertificate> check_minimal_four_stars(const ActionSetup& setup, std::size_t cap) {
    validate_setup(setup);
    GroupSpec combined{setup.g_group.generators, "<G, Gamma>"};
    combined.generators.insert(combined.generators.end(), setup.gamma_group.generators.begin(),
                               setup.gamma_group.generators.end());
    group_closure(combined, cap);  // cap guard on the combined group

    std::vector<LatticeIsometry> order_three;
    for (const auto& g : group_closure(setup.g_group, cap))
        if (has_order_three(g)) order_three.push_back(g);
    if (order_three.empty()) return std::nullopt;

    std::vector<std::array<CurveId, kCurveCount>> generator_perms;
    for (const auto& g : combined.generators) generator_perms.push_back(curve_permutation(g));
    std::vector<std::array<CurveId, kCurveCount>> order_three_perms;
    for (const auto& g : order_three) order_three_perms.push_back(curve_permutation(g));

    struct Candidate {
        StarConfiguration star;
        std::size_t element;
    };
    std::vector<Candidate> candidates;
    for (const auto& s : enumerate_stars()) {
        if (!std::all_of(generator_perms.begin(), generator_perms.end(),
                         [&](const auto& p) { return setwise_invariant(s, p); }))
            continue;
        for (std::size_t e = 0; e < order_three.size(); ++e)
            if (moves_some_member(s, order_three_perms[e])) {
                candidates.push_back({s, e});
                break;
            }
    }

    std::vector<std::size_t> chosen;
    auto search = [&](auto&& self, std::size_t from) -> bool {
        if (chosen.size() == 4) return true;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t j) {
                return matches_pattern(candidates[i].star, candidates[j].star, PairType::Asynchronized);
            });
            if (!ok) continue;
            chosen.push_back(i);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;

    MinimalityCertificate cert;
    for (std::size_t i : chosen) {
        cert.stars.push_back(candidates[i].star);
        cert.faithful_elements.push_back(order_three[candidates[i].element]);
    }
    cert.combined_rank = fixed_rank(combined);
    if (cert.combined_rank != 1)
        throw InvariantViolation("four asynchronized invariant stars found but invariant rank is " +
                                 std::to_string(cert.combined_rank));
    return cert;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Rational: return "Rational";
        case Verdict::NotRational: return "NotRational";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

RationalityVerdict rationality_report(const ActionSetup& setup, std::size_t cap) {
    validate_setup(setup);
    RationalityVerdict out;
    GroupSpec combined{setup.g_group.generators, "<G, Gamma>"};
    combined.generators.insert(combined.generators.end(), setup.gamma_group.generators.begin(),
                               setup.gamma_group.generators.end());
    out.ranks = {fixed_rank(setup.g_group), fixed_rank(setup.gamma_group), fixed_rank(combined)};

    using Rule = std::optional<Witness> (*)(const GroupSpec&, std::size_t);
    constexpr std::array<std::pair<Rule, Verdict>, 5> rules{{
        {check_rational_two_stars, Verdict::Rational},
        {check_rational_triple, Verdict::Rational},
        {check_not_rational_carter, Verdict::NotRational},
        {check_not_rational_stars, Verdict::NotRational},
        {check_not_rational_even, Verdict::NotRational},
    }};
    for (const auto& [check, verdict] : rules) {
        if (auto w = check(setup.gamma_group, cap)) {
            out.verdict = verdict;
            out.witness = std::move(w);
            break;
        }
    }
    out.minimality = check_minimal_four_stars(setup, cap);
    return out;
}

bool replay(const Witness& w, std::string* why) {
    if (w.rule == rule::kRationalTriple) {
        if (w.curves.size() != 3) return fail(why, "triple witness needs three curves");
        for (const auto& g : w.group)
            for (CurveId c : w.curves)
                if (g(curve(c).cls) != curve(c).cls) return fail(why, curve_name(c) + " is not fixed");
        const auto& a = curve(w.curves[0]).cls;
        const auto& b = curve(w.curves[1]).cls;
        const auto& c = curve(w.curves[2]).cls;
        if (pair(a, b) != 1 || pair(b, c) != 1 || pair(a, c) != 0) return fail(why, "pairings are not (1, 1, 0)");
        const DivisorClass d = a + b + c;
        const DivisorClass k = DivisorClass::canonical();
        if (pair(d, d) != 1 || pair(d, k) != -3) return fail(why, "D^2 != 1 or D.K != -3");
        // Riemann-Roch: h^0(D) = D.(D - K)/2 + 1.
        if (pair(d, d - k) / 2 + 1 != 3) return fail(why, "linear system is not a net");
        return true;
    }
    if (w.rule == rule::kRationalTwoStars) {
        if (w.stars.size() != 2) return fail(why, "two-star witness needs two stars");
        for (const auto& s : w.stars) {
            if (!is_star(s.curves())) return fail(why, "not a star");
            for (const auto& g : w.group)
                for (CurveId c : s.curves())
                    if (g(curve(c).cls) != curve(c).cls) return fail(why, curve_name(c) + " is not fixed");
        }
        if (!all_ones(w.stars[0], w.stars[1])) return fail(why, "stars are not asynchronized");
        return true;
    }
    if (w.rule == rule::kNotRationalCarter) {
        if (w.elements.size() != 1) return fail(why, "Carter witness needs one element");
        const auto& g = w.elements[0];
        if (!has_order_three(g)) return fail(why, "element does not have order 3");
        const int r = fixed_rank(g);
        if (r != 3 && r != 1) return fail(why, "invariant rank " + std::to_string(r) + " is not 3 or 1");
        if (!in_closure(g, w.group)) return fail(why, "element is not in the group");
        return true;
    }
    if (w.rule == rule::kNotRationalStars) {
        if (w.elements.size() != 1 || w.stars.size() < 3) return fail(why, "needs one element and three stars");
        const auto& g = w.elements[0];
        if (!has_order_three(g)) return fail(why, "element does not have order 3");
        const auto perm = curve_permutation(g);
        for (std::size_t i = 0; i < w.stars.size(); ++i) {
            const auto& s = w.stars[i];
            if (!is_star(s.curves())) return fail(why, "not a star");
            if (!setwise_invariant(s, perm)) return fail(why, "star is not invariant");
            if (!moves_some_member(s, perm)) return fail(why, "action on star is trivial");
            for (std::size_t j = 0; j < i; ++j)
                if (w.stars[j] == s) return fail(why, "stars repeat");
        }
        if (!in_closure(g, w.group)) return fail(why, "element is not in the group");
        return true;
    }
    if (w.rule == rule::kNotRationalEven) {
        if (w.elements.size() != 1 || w.stars.size() != 1) return fail(why, "needs one element and one star");
        const auto& g = w.elements[0];
        const auto& s = w.stars[0];
        if (!is_star(s.curves())) return fail(why, "not a star");
        for (CurveId h : s.curves()) {
            const DivisorClass image = g(curve(h).cls);
            if (pair(curve(h).cls, image) != 3) return fail(why, "H.gH != 3 for " + curve_name(h));
            auto id = find_curve(image);
            if (!id || !s.contains(*id)) return fail(why, "star is not invariant");
        }
        if (!in_closure(g, w.group)) return fail(why, "element is not in the group");
        return true;
    }
    return fail(why, "unknown rule '" + w.rule + "'");
}

bool replay(const MinimalityCertificate& c, const ActionSetup& setup, std::string* why) {
    if (c.stars.size() != 4 || c.faithful_elements.size() != 4) return fail(why, "needs four stars and elements");
    std::vector<LatticeIsometry> all = setup.g_group.generators;
    all.insert(all.end(), setup.gamma_group.generators.begin(), setup.gamma_group.generators.end());
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& s = c.stars[i];
        if (!is_star(s.curves())) return fail(why, "not a star");
        for (const auto& g : all)
            if (!setwise_invariant(s, curve_permutation(g))) return fail(why, "star is not <G, Gamma>-invariant");
        const auto& h = c.faithful_elements[i];
        if (!has_order_three(h)) return fail(why, "element does not have order 3");
        if (!moves_some_member(s, curve_permutation(h))) return fail(why, "element acts trivially on star");
        if (!in_closure(h, setup.g_group.generators)) return fail(why, "element is not in G");
        for (std::size_t j = 0; j < i; ++j)
            if (!all_ones(s, c.stars[j])) return fail(why, "stars are not pairwise asynchronized");
    }
    if (fixed_rank(std::span<const LatticeIsometry>(all)) != 1) return fail(why, "invariant rank is not 1");
    return true;
}

}  // namespace dp1

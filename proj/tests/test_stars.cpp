#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "dp1/errors.hpp"
#include "dp1/stars.hpp"
#include "dp1/weyl.hpp"

using namespace dp1;

namespace {

// Direct pairing check on a 6-tuple, independent of is_star.
bool star_pattern(const std::array<CurveId, 6>& t) {
    static constexpr int want[6] = {-1, 0, 2, 3, 2, 0};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (pair(curve(t[i]).cls, curve(t[j]).cls) != want[((j - i) % 6 + 6) % 6]) return false;
    return true;
}

}  // namespace

TEST_CASE("star count from closed-form completion of disjoint pairs") {
    const auto K = DivisorClass::canonical();
    std::set<std::array<CurveId, 6>> sets;
    long disjoint_ordered = 0;
    for (CurveId a = 0; a < kCurveCount; ++a)
        for (CurveId b = 0; b < kCurveCount; ++b) {
            if (a == b || pair(curve(a).cls, curve(b).cls) != 0) continue;
            ++disjoint_ordered;
            const auto A = curve(a).cls, B = curve(b).cls;
            const std::array<DivisorClass, 6> cls{A, B, -K - A + B, -2 * K - A, -2 * K - B, -K + A - B};
            std::array<CurveId, 6> t;
            for (int i = 0; i < 6; ++i) {
                const auto id = find_curve(cls[i]);
                REQUIRE(id.has_value());
                t[i] = *id;
            }
            REQUIRE(star_pattern(t));
            std::sort(t.begin(), t.end());
            sets.insert(t);
        }
    CHECK(disjoint_ordered == 13440);
    CHECK(sets.size() == 1120);
    CHECK(enumerate_stars().size() == sets.size());
    std::set<std::array<CurveId, 6>> ours;
    for (const auto& s : enumerate_stars()) {
        auto t = s.curves();
        CHECK(star_pattern(t));
        std::sort(t.begin(), t.end());
        ours.insert(t);
    }
    CHECK(ours == sets);
}

TEST_CASE("star_through, is_star and lookups") {
    for (CurveId c = 0; c < kCurveCount; ++c) {
        CHECK(stars_containing(c).size() == 28);
        for (CurveId d : disjoint_partners(c)) {
            const auto s = star_through(c, d);
            CHECK(s[0] == c);
            CHECK(s[1] == d);
            CHECK(is_star(s.curves()));
            CHECK(find_star(s.curves()).has_value());
        }
    }
    CHECK_THROWS_AS(star_through(0, 0), std::invalid_argument);
    const CurveId a = 0, b = bertini(0);
    CHECK_THROWS_AS(star_through(a, b), std::invalid_argument);
    StarTuple bad{0, 1, 2, 3, 4, 5};
    CHECK_FALSE(is_star(bad));
    CHECK_THROWS_AS(StarConfiguration{bad}, std::invalid_argument);
}

TEST_CASE("canonical key is invariant under the dihedral group") {
    const auto& s = enumerate_stars()[123];
    for (const auto& r : dihedral_relabelings()) {
        StarTuple t;
        for (int i = 0; i < 6; ++i) t[i] = s.curves()[r[i]];
        CHECK(StarConfiguration(t) == s);
        CHECK(canonical_key(t) == s.canonical_key());
    }
    std::set<std::array<int, 6>> distinct(dihedral_relabelings().begin(), dihedral_relabelings().end());
    CHECK(distinct.size() == 12);
}

TEST_CASE("isometries map stars to stars") {
    std::mt19937 rng(23);
    const auto& roots = enumerate_roots();
    for (int n = 0; n < 20; ++n) {
        const auto g = reflection(roots[rng() % 240]) * reflection(roots[rng() % 240]);
        const auto perm = curve_permutation(g);
        std::set<StarTuple> image;
        for (const auto& s : enumerate_stars()) {
            const auto t = map_star(s, perm);
            CHECK(is_star(t.curves()));
            image.insert(t.canonical_key());
        }
        CHECK(image.size() == 1120);
    }
}

TEST_CASE("profile dichotomy with direct counts") {
    long all_ones = 0, touching = 0;
    for (const auto& s : enumerate_stars()) {
        for (CurveId a = 0; a < kCurveCount; ++a) {
            if (s.contains(a)) {
                CHECK_THROWS_AS(profile(a, s), std::invalid_argument);
                continue;
            }
            std::array<int, 6> p;
            for (int i = 0; i < 6; ++i) p[i] = curve_pairing(a, s[i]);
            const auto pr = profile(a, s);
            if (std::all_of(p.begin(), p.end(), [](int x) { return x == 1; })) {
                CHECK(std::holds_alternative<AllOnes>(pr));
                ++all_ones;
            } else {
                REQUIRE(std::holds_alternative<Touching>(pr));
                const int k = std::get<Touching>(pr).k;
                static constexpr int shape[6] = {0, 0, 1, 2, 2, 1};
                for (int i = 0; i < 6; ++i) CHECK(p[(k + i) % 6] == shape[i]);
                ++touching;
            }
        }
    }
    CHECK(all_ones == 1120 * 72);
    CHECK(touching == 1120 * 162);
}

TEST_CASE("pair classification") {
    const auto& stars = enumerate_stars();
    // Counts on pairs through star 0, by direct pairing inspection.
    long async = 0, classified = 0, overlapping = 0;
    for (std::size_t j = 1; j < stars.size(); ++j) {
        bool shares = false, all_ones = true;
        for (int x = 0; x < 6; ++x)
            for (int y = 0; y < 6; ++y) {
                const int p = curve_pairing(stars[0][x], stars[j][y]);
                shares |= p == -1;
                all_ones &= p == 1;
            }
        if (shares) {
            ++overlapping;
            CHECK_THROWS_AS(classify_pair(stars[0], stars[j]), InvariantViolation);
            continue;
        }
        const auto t = classify_pair(stars[0], stars[j]);
        CHECK(t == classify_pair(stars[j], stars[0]));
        CHECK((t == PairType::Asynchronized) == all_ones);
        async += all_ones;
        ++classified;
    }
    // Totals over all pairs are 67200 / 581280 / 45360; every star sees the
    // same numbers by transitivity.
    CHECK(async * 1120 / 2 == 67200);
    CHECK(classified * 1120 / 2 == 581280);
    CHECK(overlapping * 1120 / 2 == 45360);
    CHECK_THROWS_AS(classify_pair(stars[0], stars[0]), std::invalid_argument);
}

TEST_CASE("pair patterns have the documented row sums") {
    for (auto t : kPairTypes) {
        const auto& p = pair_pattern(t);
        for (const auto& row : p) {
            int sum = 0;
            for (int x : row) sum += x;
            // A.(B_1 + ... + B_6) = A.(-6K) = 6 for any exceptional A.
            CHECK(sum == 6);
        }
    }
}

TEST_CASE("automorphisms of the weighted star graphs") {
    const auto& stars = enumerate_stars();
    const std::vector<StarConfiguration> one{stars[0]};
    CHECK(star_graph_automorphisms(one) == 12);
    std::map<PairType, std::uint64_t> seen;
    for (std::size_t j = 1; j < stars.size() && seen.size() < 3; ++j) {
        try {
            const auto t = classify_pair(stars[0], stars[j]);
            const std::vector<StarConfiguration> two{stars[0], stars[j]};
            seen.emplace(t, star_graph_automorphisms(two));
        } catch (const InvariantViolation&) {
        }
    }
    CHECK(seen[PairType::Asynchronized] == 288);
    CHECK(seen[PairType::Synchronized] == 24);
    CHECK(seen[PairType::Abnormal] == 16);
}

TEST_CASE("invariant stars of the order-3 representatives") {
    const std::array<std::pair<std::size_t, std::size_t>, 4> expected{{{120, 1}, {2, 2}, {1, 12}, {0, 40}}};
    for (auto t : kCarterTypes3) {
        const auto& g = representative_order3(t);
        const auto perm = curve_permutation(g);
        std::size_t trivial = 0, faithful = 0;
        for (const auto& a : invariant_stars(g)) {
            CHECK(map_star(a.star, perm) == a.star);
            bool pointwise = true;
            for (CurveId c : a.star.curves()) pointwise &= perm[c] == c;
            CHECK(pointwise == (a.kind == StarActionKind::Trivial));
            (pointwise ? trivial : faithful)++;
        }
        const auto [et, ef] = expected[static_cast<std::size_t>(t)];
        CHECK(trivial == et);
        CHECK(faithful == ef);
    }
}

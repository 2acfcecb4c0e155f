#include <doctest.h>

#include <queue>
#include <set>

#include "dp1/errors.hpp"
#include "dp1/curves.hpp"
#include "dp1/weyl.hpp"

using namespace dp1;

TEST_CASE("roots agree with the orbit of the simple roots") {
    const auto simple = simple_roots();
    std::set<std::array<int, 9>> orbit;
    std::queue<DivisorClass> todo;
    for (const auto& r : simple)
        if (orbit.insert(r.coeffs).second) todo.push(r);
    while (!todo.empty()) {
        const auto v = todo.front();
        todo.pop();
        for (const auto& r : simple) {
            const auto w = v + pair(v, r) * r;
            if (orbit.insert(w.coeffs).second) todo.push(w);
        }
    }
    const auto& roots = enumerate_roots();
    REQUIRE(roots.size() == 240);
    std::set<std::array<int, 9>> ours;
    for (const auto& r : roots) {
        ours.insert(r.coeffs);
        CHECK(is_root(r));
    }
    CHECK(ours == orbit);
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(find_root(roots[i]) == static_cast<int>(i));
    CHECK_FALSE(find_root(DivisorClass::line()).has_value());
}

TEST_CASE("reflections") {
    CHECK_THROWS_AS(reflection(DivisorClass::exceptional(1)), std::invalid_argument);
    const auto& roots = enumerate_roots();
    for (const auto& r : roots) {
        const auto s = reflection(r);
        CHECK((s * s).is_identity());
        CHECK(element_order(s) == 2);
    }
    const std::vector<int> word{0, 17, 101};
    CHECK(reflection_word(word) == reflection(roots[0]) * reflection(roots[17]) * reflection(roots[101]));
    const std::vector<int> bad{240};
    CHECK_THROWS_AS(reflection_word(bad), std::out_of_range);
}

TEST_CASE("A2 rotations have order 3 and invariant rank 7") {
    const auto simple = simple_roots();
    const auto g = a2_rotation(simple[1], simple[2]);
    CHECK(element_order(g) == 3);
    CHECK(fixed_rank(g) == 7);
    CHECK(carter_type_order3(g) == CarterType3::A2);
    CHECK_THROWS_AS(a2_rotation(simple[1], simple[3]), std::invalid_argument);
}

TEST_CASE("element order") {
    CHECK(element_order(LatticeIsometry::identity()) == 1);
    CHECK(element_order(s8_action("(1 2 3 4 5)(6 7 8)")) == 15);
    CHECK(element_order(s8_action("(1 2 3 4)(5 6)")) == 4);
    CHECK(element_order(bertini_isometry()) == 2);
    CHECK_THROWS_AS(element_order(s8_action("(1 2 3 4 5)(6 7 8)"), 10), CapExceeded);
}

TEST_CASE("order-3 representatives") {
    CHECK(representative_order3(CarterType3::A2) == s8_action("(1 2 3)"));
    CHECK(representative_order3(CarterType3::A2x2) == s8_action("(1 2 3)(4 5 6)"));
    int expected = 7;
    for (auto t : kCarterTypes3) {
        const auto& g = representative_order3(t);
        CHECK(element_order(g) == 3);
        CHECK(fixed_rank(g) == expected);
        CHECK(invariant_rank(t) == expected);
        CHECK(carter_type_order3(g) == t);
        CHECK(parse_carter_type(tag(t)) == t);
        CHECK(parse_carter_type(display_name(t)) == t);
        expected -= 2;
    }
    CHECK(display_name(CarterType3::A2x2) == "A2^2");
    CHECK(tag(CarterType3::A2x4) == "A2x4");
    CHECK_THROWS_AS(parse_carter_type("A3"), ParseError);
    CHECK_THROWS_AS(carter_type_order3(LatticeIsometry::identity()), std::invalid_argument);
    CHECK_THROWS_AS(carter_type_order3(s8_action("(1 2)")), std::invalid_argument);
}

TEST_CASE("orthogonal A2 pairs") {
    const auto pairs = orthogonal_a2_pairs(4);
    REQUIRE(pairs.size() == 4);
    const auto& roots = enumerate_roots();
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(pair(roots[pairs[i].a], roots[pairs[i].b]) == 1);
        for (std::size_t j = i + 1; j < 4; ++j)
            for (int x : {pairs[i].a, pairs[i].b})
                for (int y : {pairs[j].a, pairs[j].b}) CHECK(pair(roots[x], roots[y]) == 0);
    }
    // Types built from the same search are nested.
    const auto& g3 = representative_order3(CarterType3::A2x3);
    const auto& g4 = representative_order3(CarterType3::A2x4);
    CHECK(commute(g3, g4));
}

TEST_CASE("Bertini involution") {
    const auto b = bertini_isometry();
    CHECK(fixed_rank(b) == 1);
    for (CurveId c = 0; c < kCurveCount; ++c) CHECK(b(curve(c).cls) == curve(bertini(c)).cls);
}

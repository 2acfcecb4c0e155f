#include "dp1/weyl.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dp1/curves.hpp"

namespace dp1 {

namespace {

constexpr int form_sign(int i) { return i == 0 ? 1 : -1; }

Matrix9 matrix_from_images(const std::array<DivisorClass, kRank>& images) {
    Matrix9 m{};
    for (int j = 0; j < kRank; ++j)
        for (int i = 0; i < kRank; ++i) m[i][j] = images[j].coeffs[i];
    return m;
}

}  // namespace

bool is_root(const DivisorClass& v) {
    return pair(v, v) == -2 && pair(v, DivisorClass::canonical()) == 0;
}

const std::vector<DivisorClass>& enumerate_roots() {
    static const std::vector<DivisorClass> roots = vectors_with(-2, 0);
    return roots;
}

std::optional<int> find_root(const DivisorClass& v) {
    const auto& roots = enumerate_roots();
    auto it = std::lower_bound(roots.begin(), roots.end(), v);
    if (it == roots.end() || *it != v) return std::nullopt;
    return static_cast<int>(it - roots.begin());
}

LatticeIsometry reflection(const DivisorClass& r) {
    if (!is_root(r)) throw std::invalid_argument("reflection needs a root, got " + to_string(r));
    std::array<DivisorClass, kRank> images;
    for (int j = 0; j < kRank; ++j) {
        DivisorClass e;
        e.coeffs[j] = 1;
        // pair(e_j, r) = sign_j * r_j on the diagonal form.
        images[j] = e + (form_sign(j) * r.coeffs[j]) * r;
    }
    return LatticeIsometry(matrix_from_images(images));
}

LatticeIsometry reflection_word(std::span<const int> root_ids) {
    const auto& roots = enumerate_roots();
    LatticeIsometry w = LatticeIsometry::identity();
    for (int id : root_ids) {
        if (id < 0 || id >= static_cast<int>(roots.size()))
            throw std::out_of_range("root id " + std::to_string(id) + " outside 0..239");
        w = w * reflection(roots[static_cast<std::size_t>(id)]);
    }
    return w;
}

LatticeIsometry a2_rotation(const DivisorClass& a, const DivisorClass& b) {
    if (pair(a, b) != 1) throw std::invalid_argument("A2 rotation needs roots with a.b = 1");
    return reflection(a) * reflection(b);
}

int element_order(const LatticeIsometry& g, int cap) {
    if (cap < 1) throw std::invalid_argument("order cap must be at least 1");
    LatticeIsometry p = g;
    int n = 1;
    while (!p.is_identity()) {
        if (n >= cap) throw CapExceeded("element order exceeds cap of " + std::to_string(cap));
        p = p * g;
        ++n;
    }
    return n;
}

std::string_view tag(CarterType3 t) {
    switch (t) {
        case CarterType3::A2: return "A2";
        case CarterType3::A2x2: return "A2x2";
        case CarterType3::A2x3: return "A2x3";
        case CarterType3::A2x4: return "A2x4";
    }
    return "?";
}

std::string_view display_name(CarterType3 t) {
    switch (t) {
        case CarterType3::A2: return "A2";
        case CarterType3::A2x2: return "A2^2";
        case CarterType3::A2x3: return "A2^3";
        case CarterType3::A2x4: return "A2^4";
    }
    return "?";
}

CarterType3 parse_carter_type(std::string_view s) {
    for (auto t : kCarterTypes3)
        if (s == tag(t) || s == display_name(t)) return t;
    throw ParseError("unknown Carter type '" + std::string(s) + "'");
}

int invariant_rank(CarterType3 t) {
    switch (t) {
        case CarterType3::A2: return 7;
        case CarterType3::A2x2: return 5;
        case CarterType3::A2x3: return 3;
        case CarterType3::A2x4: return 1;
    }
    return -1;
}

CarterType3 carter_type_order3(const LatticeIsometry& g) {
    if (g.is_identity() || !(g * g * g).is_identity())
        throw std::invalid_argument("element does not have order 3");
    const int rank = fixed_rank(g);
    for (auto t : kCarterTypes3)
        if (invariant_rank(t) == rank) return t;
    throw InvariantViolation("order-3 element with invariant rank " + std::to_string(rank));
}

std::vector<A2Pair> orthogonal_a2_pairs(int count) {
    const auto& roots = enumerate_roots();
    std::vector<A2Pair> candidates;
    for (int a = 0; a < kRootCount; ++a)
        for (int b = a + 1; b < kRootCount; ++b)
            if (pair(roots[a], roots[b]) == 1) candidates.push_back({a, b});

    std::vector<A2Pair> chosen;
    auto orthogonal_to_chosen = [&](const A2Pair& p) {
        for (const auto& c : chosen)
            for (int x : {p.a, p.b})
                for (int y : {c.a, c.b})
                    if (pair(roots[x], roots[y]) != 0) return false;
        return true;
    };
    auto search = [&](auto&& self, std::size_t from) -> bool {
        if (static_cast<int>(chosen.size()) == count) return true;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            if (!orthogonal_to_chosen(candidates[i])) continue;
            chosen.push_back(candidates[i]);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!search(search, 0))
        throw InvariantViolation("no " + std::to_string(count) + " mutually orthogonal A2 subsystems");
    return chosen;
}

const LatticeIsometry& representative_order3(CarterType3 t) {
    static const std::array<LatticeIsometry, 4> reps = [] {
        const auto& roots = enumerate_roots();
        const auto pairs = orthogonal_a2_pairs(4);
        auto product = [&](int n) {
            LatticeIsometry g = LatticeIsometry::identity();
            for (int i = 0; i < n; ++i)
                g = g * a2_rotation(roots[pairs[i].a], roots[pairs[i].b]);
            return g;
        };
        return std::array<LatticeIsometry, 4>{s8_action("(1 2 3)"), s8_action("(1 2 3)(4 5 6)"),
                                              product(3), product(4)};
    }();
    return reps[static_cast<std::size_t>(t)];
}

LatticeIsometry bertini_isometry() {
    const DivisorClass k = DivisorClass::canonical();
    std::array<DivisorClass, kRank> images;
    for (int j = 0; j < kRank; ++j) {
        DivisorClass e;
        e.coeffs[j] = 1;
        images[j] = -e + (2 * pair(e, k)) * k;
    }
    return LatticeIsometry(matrix_from_images(images));
}

}  // namespace dp1

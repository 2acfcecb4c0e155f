#include "dp1/stars.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace dp1 {

namespace {

constexpr int mod6(int i) { return ((i % 6) + 6) % 6; }

// Pairing offsets along the hexagon: distance 0..3 -> -1, 0, 2, 3.
constexpr std::array<int, 6> kStarRow{-1, 0, 2, 3, 2, 0};

struct StarTable {
    std::vector<StarConfiguration> stars;
    std::map<StarTuple, int> index;
    std::array<std::vector<int>, kCurveCount> by_curve;

    StarTable() {
        std::set<StarTuple> seen;
        for (CurveId a = 0; a < kCurveCount; ++a)
            for (CurveId b = a + 1; b < kCurveCount; ++b) {
                if (curve_pairing(a, b) != 0) continue;
                auto s = star_through(a, b);
                if (seen.insert(s.canonical_key()).second) stars.push_back(s);
            }
        std::sort(stars.begin(), stars.end());
        for (int i = 0; i < static_cast<int>(stars.size()); ++i) {
            index.emplace(stars[i].canonical_key(), i);
            for (CurveId c : stars[i].curves()) by_curve[c].push_back(i);
        }
    }
};

const StarTable& table() {
    static const StarTable t;
    return t;
}

using Pairing6 = std::array<std::array<int, 6>, 6>;

Pairing6 cross_pairings(const StarConfiguration& s1, const StarConfiguration& s2) {
    Pairing6 m{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m[i][j] = curve_pairing(s1[i], s2[j]);
    return m;
}

bool matches(const Pairing6& m, const PairPattern& p) {
    const auto& dihedral = dihedral_relabelings();
    for (const auto& row_map : dihedral)
        for (const auto& col_map : dihedral) {
            bool ok = true;
            for (int i = 0; i < 6 && ok; ++i)
                for (int j = 0; j < 6; ++j)
                    if (m[row_map[i]][col_map[j]] != p[i][j]) {
                        ok = false;
                        break;
                    }
            if (ok) return true;
        }
    return false;
}

PairPattern make_pattern(PairType t) {
    PairPattern p{};
    switch (t) {
        case PairType::Asynchronized:
            for (auto& row : p) row.fill(1);
            break;
        case PairType::Synchronized: {
            // A_i.B_{i+d} for d = 0..5.
            constexpr std::array<int, 6> by_offset{1, 2, 2, 1, 0, 0};
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) p[i][j] = by_offset[mod6(j - i)];
            break;
        }
        case PairType::Abnormal: {
            // 0-based: rows/columns 0 and 3 meet everything once; {1,2} and
            // {4,5} form two blocks of 2s on the diagonal and 0s off it.
            auto block = [](int i) { return (i == 1 || i == 2) ? 0 : (i == 4 || i == 5) ? 1 : -1; };
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) {
                    if (block(i) < 0 || block(j) < 0) p[i][j] = 1;
                    else p[i][j] = block(i) == block(j) ? 2 : 0;
                }
            break;
        }
    }
    return p;
}

}  // namespace

const std::array<std::array<int, 6>, 12>& dihedral_relabelings() {
    static const auto maps = [] {
        std::array<std::array<int, 6>, 12> m{};
        for (int r = 0; r < 6; ++r)
            for (int i = 0; i < 6; ++i) {
                m[r][i] = mod6(r + i);
                m[6 + r][i] = mod6(r - i);
            }
        return m;
    }();
    return maps;
}

StarTuple canonical_key(const StarTuple& t) {
    StarTuple best = t;
    for (const auto& sigma : dihedral_relabelings()) {
        StarTuple cand;
        for (int i = 0; i < 6; ++i) cand[i] = t[sigma[i]];
        best = std::min(best, cand);
    }
    return best;
}

StarConfiguration::StarConfiguration(const StarTuple& curves) : curves_(curves) {
    if (!is_star(curves_)) throw std::invalid_argument("curves do not form a star configuration");
    key_ = dp1::canonical_key(curves_);
}

bool StarConfiguration::contains(CurveId c) const {
    return std::find(curves_.begin(), curves_.end(), c) != curves_.end();
}

bool is_star(std::span<const CurveId, 6> ids) {
    for (int i = 0; i < 6; ++i) {
        if (ids[i] < 0 || ids[i] >= kCurveCount) return false;
        for (int d = 1; d < 6; ++d)
            if (curve_pairing(ids[i], ids[mod6(i + d)]) != kStarRow[d]) return false;
    }
    // Distinctness follows: distinct positions pair to 0, 2 or 3, never -1.
    return true;
}

StarConfiguration star_through(CurveId a, CurveId b) {
    if (a == b || curve_pairing(a, b) != 0)
        throw std::invalid_argument("star_through needs two distinct disjoint curves");
    const DivisorClass k = DivisorClass::canonical();
    const DivisorClass& ca = curve(a).cls;
    const DivisorClass& cb = curve(b).cls;
    const std::array<DivisorClass, 6> classes{ca, cb, -k - ca + cb, -2 * k - ca, -2 * k - cb, -k + ca - cb};
    StarTuple ids;
    for (int i = 0; i < 6; ++i) {
        auto id = find_curve(classes[i]);
        if (!id) throw InvariantViolation("star member " + to_string(classes[i]) + " is not a curve");
        ids[i] = *id;
    }
    return StarConfiguration(ids);
}

const std::vector<StarConfiguration>& enumerate_stars() { return table().stars; }

std::optional<int> find_star(const StarTuple& curves) {
    const auto& idx = table().index;
    auto it = idx.find(canonical_key(curves));
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

const std::vector<int>& stars_containing(CurveId c) { return table().by_curve.at(static_cast<std::size_t>(c)); }

StarConfiguration map_star(const StarConfiguration& s, const std::array<CurveId, kCurveCount>& perm) {
    StarTuple t;
    for (int i = 0; i < 6; ++i) t[i] = perm[s[i]];
    return StarConfiguration(t);
}

Profile profile(CurveId a, const StarConfiguration& s) {
    if (s.contains(a)) throw std::invalid_argument("profile: curve " + curve_name(a) + " lies on the star");
    std::array<int, 6> v;
    for (int i = 0; i < 6; ++i) v[i] = curve_pairing(a, s[i]);
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 1; })) return AllOnes{};
    for (int k = 0; k < 6; ++k) {
        if (v[k] == 0 && v[mod6(k + 1)] == 0 && v[mod6(k + 2)] == 1 && v[mod6(k + 5)] == 1 &&
            v[mod6(k + 3)] == 2 && v[mod6(k + 4)] == 2)
            return Touching{k};
    }
    throw InvariantViolation("curve " + curve_name(a) + " meets a star in an unexpected pattern");
}

std::string_view pair_type_name(PairType t) {
    switch (t) {
        case PairType::Asynchronized: return "Asynchronized";
        case PairType::Synchronized: return "Synchronized";
        case PairType::Abnormal: return "Abnormal";
    }
    return "?";
}

const PairPattern& pair_pattern(PairType t) {
    static const std::array<PairPattern, 3> patterns{make_pattern(PairType::Asynchronized),
                                                     make_pattern(PairType::Synchronized),
                                                     make_pattern(PairType::Abnormal)};
    return patterns[static_cast<std::size_t>(t)];
}

bool matches_pattern(const StarConfiguration& s1, const StarConfiguration& s2, PairType t) {
    return matches(cross_pairings(s1, s2), pair_pattern(t));
}

PairType classify_pair(const StarConfiguration& s1, const StarConfiguration& s2) {
    if (s1 == s2) throw std::invalid_argument("classify_pair needs two distinct stars");
    const auto m = cross_pairings(s1, s2);
    std::optional<PairType> found;
    int hits = 0;
    for (auto t : kPairTypes)
        if (matches(m, pair_pattern(t))) {
            found = t;
            ++hits;
        }
    if (hits != 1) {
        std::string shared;
        for (CurveId c : s1.curves())
            if (s2.contains(c)) shared += " " + curve_name(c);
        throw InvariantViolation("star pair matches " + std::to_string(hits) + " patterns" +
                                 (shared.empty() ? "" : "; shared curves:" + shared));
    }
    return *found;
}

std::vector<StarAction> invariant_stars(const LatticeIsometry& g) {
    const auto perm = curve_permutation(g);
    std::vector<StarAction> out;
    for (const auto& s : enumerate_stars()) {
        StarTuple image;
        bool pointwise = true;
        for (int i = 0; i < 6; ++i) {
            image[i] = perm[s[i]];
            pointwise = pointwise && image[i] == s[i];
        }
        if (canonical_key(image) != s.canonical_key()) continue;
        out.push_back({s, pointwise ? StarActionKind::Trivial : StarActionKind::Faithful});
    }
    return out;
}

std::uint64_t star_graph_automorphisms(std::span<const StarConfiguration> stars) {
    if (stars.empty() || stars.size() > 2)
        throw std::invalid_argument("star_graph_automorphisms takes one or two stars");
    if (stars.size() == 2 && stars[0] == stars[1])
        throw std::invalid_argument("star_graph_automorphisms needs two distinct stars");

    std::vector<CurveId> verts;
    for (const auto& s : stars)
        for (CurveId c : s.curves())
            if (std::find(verts.begin(), verts.end(), c) == verts.end()) verts.push_back(c);
    const int n = static_cast<int>(verts.size());
    std::vector<std::vector<int>> w(n, std::vector<int>(n));
    std::vector<std::vector<int>> signature(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = curve_pairing(verts[i], verts[j]);
        signature[i] = w[i];
        std::sort(signature[i].begin(), signature[i].end());
    }

    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::uint64_t count = 0;
    auto extend = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (int t = 0; t < n; ++t) {
            if (used[t] || signature[t] != signature[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = w[v][u] == w[t][image[u]];
            if (!ok) continue;
            image[v] = t;
            used[t] = true;
            self(self, v + 1);
            used[t] = false;
        }
        image[v] = -1;
    };
    extend(extend, 0);
    return count;
}

}  // namespace dp1

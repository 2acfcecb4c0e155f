#include "dp1/curves.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dp1 {

namespace {

DivisorClass E(int i) { return DivisorClass::exceptional(i); }
DivisorClass L() { return DivisorClass::line(); }

DivisorClass sum_e() {
    DivisorClass s;
    for (int i = 1; i <= 8; ++i) s += E(i);
    return s;
}

struct CurveTable {
    std::vector<ExceptionalCurve> curves;
    std::map<DivisorClass, CurveId> index;
    std::array<std::array<signed char, kCurveCount>, kCurveCount> pairing{};
    std::array<CurveId, kCurveCount> bertini{};

    CurveTable() {
        auto classes = family_formula_classes();
        std::sort(classes.begin(), classes.end());
        if (classes.size() != kCurveCount ||
            std::adjacent_find(classes.begin(), classes.end()) != classes.end())
            throw InvariantViolation("family formulas do not give 240 distinct classes");
        for (const auto& c : classes) {
            const auto id = static_cast<CurveId>(curves.size());
            curves.push_back({id, c, *family_of(c)});
            index.emplace(c, id);
        }
        const DivisorClass minus_two_k = -2 * DivisorClass::canonical();
        for (CurveId a = 0; a < kCurveCount; ++a) {
            for (CurveId b = 0; b < kCurveCount; ++b)
                pairing[a][b] = static_cast<signed char>(pair(curves[a].cls, curves[b].cls));
            bertini[a] = index.at(minus_two_k - curves[a].cls);
        }
    }
};

const CurveTable& table() {
    static const CurveTable t;
    return t;
}

std::string digits(const std::vector<int>& idx) {
    std::string s;
    for (int i : idx) s += static_cast<char>('0' + i);
    return s;
}

std::vector<int> indices_with(const DivisorClass& d, int value) {
    std::vector<int> out;
    for (int i = 1; i <= 8; ++i)
        if (d.coeffs[i] == value) out.push_back(i);
    return out;
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::E: return "E";
        case Family::L2: return "L2";
        case Family::Q: return "Q";
        case Family::C: return "C";
        case Family::BQ: return "BQ";
        case Family::BL: return "BL";
        case Family::BE: return "BE";
    }
    return "?";
}

std::vector<DivisorClass> family_formula_classes() {
    const DivisorClass s = sum_e();
    const DivisorClass minus_two_k = -2 * DivisorClass::canonical();
    std::vector<DivisorClass> out;
    std::vector<DivisorClass> e, l2, q;
    for (int i = 1; i <= 8; ++i) e.push_back(E(i));
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j) l2.push_back(L() - E(i) - E(j));
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j)
            for (int k = j + 1; k <= 8; ++k) q.push_back(2 * L() + E(i) + E(j) + E(k) - s);
    out.insert(out.end(), e.begin(), e.end());
    out.insert(out.end(), l2.begin(), l2.end());
    out.insert(out.end(), q.begin(), q.end());
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j)
            if (i != j) out.push_back(3 * L() - E(i) + E(j) - s);
    for (const auto& c : q) out.push_back(minus_two_k - c);
    for (const auto& c : l2) out.push_back(minus_two_k - c);
    for (const auto& c : e) out.push_back(minus_two_k - c);
    return out;
}

std::vector<DivisorClass> search_exceptional_classes() { return vectors_with(-1, -1); }

std::optional<Family> family_of(const DivisorClass& d) {
    const int cl = d.degree();
    if (cl < 0 || cl > 6) return std::nullopt;
    return kFamilies[static_cast<std::size_t>(cl)];
}

const std::vector<ExceptionalCurve>& enumerate_curves() { return table().curves; }

const ExceptionalCurve& curve(CurveId id) { return table().curves.at(static_cast<std::size_t>(id)); }

std::optional<CurveId> find_curve(const DivisorClass& d) {
    const auto& idx = table().index;
    auto it = idx.find(d);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

int curve_pairing(CurveId a, CurveId b) { return table().pairing[a][b]; }

CurveId bertini(CurveId c) { return table().bertini[c]; }

const ExceptionalCurve& bertini(const ExceptionalCurve& c) { return curve(bertini(c.id)); }

std::vector<CurveId> disjoint_partners(CurveId c) {
    std::vector<CurveId> out;
    for (CurveId d = 0; d < kCurveCount; ++d)
        if (d != c && curve_pairing(c, d) == 0) out.push_back(d);
    return out;
}

std::array<CurveId, kCurveCount> curve_permutation(const LatticeIsometry& g) {
    std::array<CurveId, kCurveCount> perm{};
    for (const auto& c : enumerate_curves()) {
        auto image = find_curve(g(c.cls));
        if (!image) throw InvariantViolation("isometry sends " + curve_name(c.id) + " off the curve set");
        perm[c.id] = *image;
    }
    return perm;
}

std::vector<CurveId> invariant_curves(const LatticeIsometry& g) {
    const auto perm = curve_permutation(g);
    std::vector<CurveId> out;
    for (CurveId c = 0; c < kCurveCount; ++c)
        if (perm[c] == c) out.push_back(c);
    return out;
}

std::array<int, 9> parse_cycles(std::string_view text) {
    std::array<int, 9> image{};
    for (int i = 0; i <= 8; ++i) image[i] = i;
    std::array<bool, 9> used{};
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw ParseError("bad cycle notation '" + std::string(text) + "': " + why);
    };
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(') fail("expected '('");
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            while (pos < text.size() &&
                   (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
                ++pos;
            if (pos >= text.size()) fail("unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("unexpected character");
            // Indices are single digits, so "(123)" reads as "(1 2 3)".
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                const int v = text[pos] - '0';
                if (v < 1 || v > 8) fail("index out of range 1..8");
                if (used[v]) fail("index " + std::to_string(v) + " repeated");
                used[v] = true;
                cycle.push_back(v);
                ++pos;
            }
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) image[cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_space();
    }
    return image;
}

LatticeIsometry s8_action(std::string_view cycles) {
    const auto image = parse_cycles(cycles);
    Matrix9 m{};
    m[0][0] = 1;
    for (int i = 1; i <= 8; ++i) m[image[i]][i] = 1;
    return LatticeIsometry(m);
}

std::optional<std::string> as_permutation(const LatticeIsometry& g) {
    if (g(DivisorClass::line()) != DivisorClass::line()) return std::nullopt;
    std::array<int, 9> image{};
    for (int i = 1; i <= 8; ++i) {
        const auto v = g(E(i));
        const auto hits = indices_with(v, 1);
        if (hits.size() != 1 || v.coeffs[0] != 0 || indices_with(v, 0).size() != 7) return std::nullopt;
        image[i] = hits.front();
    }
    std::string out;
    std::array<bool, 9> seen{};
    for (int i = 1; i <= 8; ++i) {
        if (seen[i] || image[i] == i) continue;
        out += '(';
        for (int j = i; !seen[j]; j = image[j]) {
            seen[j] = true;
            if (j != i) out += ' ';
            out += static_cast<char>('0' + j);
        }
        out += ')';
    }
    return out.empty() ? std::string("()") : out;
}

std::string curve_name(CurveId id) {
    const auto& c = curve(id);
    const auto& d = c.cls;
    switch (c.family) {
        case Family::E: return "E" + digits(indices_with(d, 1));
        case Family::L2: return "L" + digits(indices_with(d, -1));
        case Family::Q: return "Q" + digits(indices_with(d, 0));
        case Family::C: return "C" + digits(indices_with(d, -2)) + "-" + digits(indices_with(d, 0));
        case Family::BQ: return "bQ" + digits(indices_with(d, -2));
        case Family::BL: return "bL" + digits(indices_with(d, -1));
        case Family::BE: return "bE" + digits(indices_with(d, -3));
    }
    return "?";
}

CurveId parse_curve_name(std::string_view name) {
    auto fail = [&] { throw ParseError("unknown curve name '" + std::string(name) + "'"); };
    std::string_view rest = name;
    bool beta = false;
    if (!rest.empty() && rest.front() == 'b') {
        beta = true;
        rest.remove_prefix(1);
    }
    if (rest.empty()) fail();
    const char kind = rest.front();
    rest.remove_prefix(1);

    std::vector<int> idx;
    int dash = -1;
    for (char ch : rest) {
        if (ch == '-' && dash < 0 && !idx.empty()) {
            dash = static_cast<int>(idx.size());
            continue;
        }
        if (ch < '1' || ch > '8') fail();
        const int v = ch - '0';
        if (std::find(idx.begin(), idx.end(), v) != idx.end()) fail();
        idx.push_back(v);
    }
    if (!std::is_sorted(idx.begin(), idx.end()) && kind != 'C') fail();

    DivisorClass cls;
    const DivisorClass s = sum_e();
    if (kind == 'E' && idx.size() == 1 && dash < 0) {
        cls = E(idx[0]);
    } else if (kind == 'L' && idx.size() == 2 && dash < 0) {
        cls = L() - E(idx[0]) - E(idx[1]);
    } else if (kind == 'Q' && idx.size() == 3 && dash < 0) {
        cls = 2 * L() + E(idx[0]) + E(idx[1]) + E(idx[2]) - s;
    } else if (kind == 'C' && !beta && idx.size() == 2 && dash == 1) {
        cls = 3 * L() - E(idx[0]) + E(idx[1]) - s;
    } else {
        fail();
    }
    if (beta) cls = -2 * DivisorClass::canonical() - cls;
    auto id = find_curve(cls);
    if (!id) fail();
    return *id;
}

}  // namespace dp1

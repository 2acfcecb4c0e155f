#include "dp1/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace dp1 {

namespace {

constexpr int form_sign(int i) { return i == 0 ? 1 : -1; }

DivisorClass column(const Matrix9& m, int j) {
    DivisorClass d;
    for (int i = 0; i < kRank; ++i) d.coeffs[i] = m[i][j];
    return d;
}

Matrix9 multiply(const Matrix9& a, const Matrix9& b) {
    Matrix9 c{};
    for (int i = 0; i < kRank; ++i)
        for (int k = 0; k < kRank; ++k) {
            const int aik = a[i][k];
            if (aik == 0) continue;
            for (int j = 0; j < kRank; ++j) c[i][j] += aik * b[k][j];
        }
    return c;
}

// Depth-first search for c_pos..c_8 with prescribed sum and sum of squares.
void search_tail(DivisorClass& d, int pos, int sum_left, int squares_left,
                 std::vector<DivisorClass>& out) {
    if (pos == kRank) {
        if (sum_left == 0 && squares_left == 0) out.push_back(d);
        return;
    }
    const int remaining = kRank - pos;
    if (sum_left * sum_left > remaining * squares_left) return;
    for (int c = 0; c * c <= squares_left; ++c) {
        for (int v : {c, -c}) {
            d.coeffs[pos] = v;
            search_tail(d, pos + 1, sum_left - v, squares_left - v * v, out);
            if (c == 0) break;
        }
    }
    d.coeffs[pos] = 0;
}

}  // namespace

std::string to_string(const DivisorClass& d) {
    std::ostringstream os;
    os << '(' << d.coeffs[0] << ';';
    for (int i = 1; i < kRank; ++i) os << (i == 1 ? " " : ", ") << d.coeffs[i];
    os << ')';
    return os.str();
}

Matrix9 identity_matrix() {
    Matrix9 m{};
    for (int i = 0; i < kRank; ++i) m[i][i] = 1;
    return m;
}

bool is_isometry(const Matrix9& m) {
    std::array<DivisorClass, kRank> images;
    for (int j = 0; j < kRank; ++j) images[j] = column(m, j);
    for (int i = 0; i < kRank; ++i)
        for (int j = i; j < kRank; ++j) {
            const int expected = i == j ? form_sign(i) : 0;
            if (pair(images[i], images[j]) != expected) return false;
        }
    const DivisorClass k = DivisorClass::canonical();
    DivisorClass mk;
    for (int i = 0; i < kRank; ++i)
        for (int j = 0; j < kRank; ++j) mk.coeffs[i] += m[i][j] * k.coeffs[j];
    return mk == k;
}

LatticeIsometry::LatticeIsometry(const Matrix9& m) : m_(m) {
    if (!is_isometry(m))
        throw std::invalid_argument("matrix does not preserve the intersection form and K");
}

LatticeIsometry LatticeIsometry::identity() { return {identity_matrix(), Unchecked{}}; }

bool LatticeIsometry::is_identity() const { return m_ == identity_matrix(); }

DivisorClass LatticeIsometry::operator()(const DivisorClass& v) const {
    DivisorClass out;
    for (int i = 0; i < kRank; ++i) {
        int s = 0;
        for (int j = 0; j < kRank; ++j) s += m_[i][j] * v.coeffs[j];
        out.coeffs[i] = s;
    }
    return out;
}

LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b) {
    return {multiply(a.m_, b.m_), LatticeIsometry::Unchecked{}};
}

LatticeIsometry LatticeIsometry::inverse() const {
    Matrix9 inv{};
    for (int i = 0; i < kRank; ++i)
        for (int j = 0; j < kRank; ++j) inv[i][j] = form_sign(i) * m_[j][i] * form_sign(j);
    return {inv, Unchecked{}};
}

std::size_t IsometryHash::operator()(const LatticeIsometry& g) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& row : g.matrix())
        for (int x : row) h = (h ^ static_cast<std::size_t>(x + 64)) * 1099511628211ull;
    return h;
}

bool commute(const LatticeIsometry& a, const LatticeIsometry& b) { return a * b == b * a; }

int matrix_rank(std::vector<std::vector<std::int64_t>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const auto& p = rows[rank];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            auto& row = rows[r];
            const std::int64_t f = row[col];
            if (f == 0) continue;
            std::int64_t g = 0;
            for (std::size_t c = 0; c < cols; ++c) {
                row[c] = row[c] * p[col] - f * p[c];
                g = std::gcd(g, row[c]);
            }
            // Keep entries small; the row only matters up to scale.
            if (g > 1)
                for (auto& x : row) x /= g;
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int fixed_rank(std::span<const LatticeIsometry> generators) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& g : generators) {
        const auto& m = g.matrix();
        for (int i = 0; i < kRank; ++i) {
            std::vector<std::int64_t> row(kRank);
            for (int j = 0; j < kRank; ++j) row[j] = m[i][j] - (i == j ? 1 : 0);
            rows.push_back(std::move(row));
        }
    }
    return kRank - matrix_rank(std::move(rows));
}

int fixed_rank(const GroupSpec& g) { return fixed_rank(std::span<const LatticeIsometry>(g.generators)); }

int fixed_rank(const LatticeIsometry& g) { return fixed_rank(std::span<const LatticeIsometry>(&g, 1)); }

int fixed_rank(std::span<const Matrix9> generators) {
    std::vector<LatticeIsometry> checked;
    checked.reserve(generators.size());
    for (const auto& m : generators) checked.emplace_back(m);
    return fixed_rank(std::span<const LatticeIsometry>(checked));
}

int moved_rank(const LatticeIsometry& g) {
    // Column rank of g - id, eliminated on the transpose.
    std::vector<std::vector<std::int64_t>> cols(kRank, std::vector<std::int64_t>(kRank));
    const auto& m = g.matrix();
    for (int i = 0; i < kRank; ++i)
        for (int j = 0; j < kRank; ++j) cols[j][i] = m[i][j] - (i == j ? 1 : 0);
    return matrix_rank(std::move(cols));
}

std::vector<DivisorClass> vectors_with(int square, int k_degree) {
    if (square >= 0) throw std::invalid_argument("vectors_with needs a negative square");
    // v.K = -3 c_L - sum c_i and v^2 = c_L^2 - sum c_i^2, so
    // (3 c_L + k_degree)^2 <= 8 (c_L^2 - square), a bounded interval in c_L.
    std::vector<DivisorClass> out;
    const int bound = 6 * std::abs(k_degree) + 3 * (1 - square) + 1;
    for (int cl = -bound; cl <= bound; ++cl) {
        const int sum = -3 * cl - k_degree;
        const int squares = cl * cl - square;
        if (sum * sum > 8 * squares) continue;
        DivisorClass d;
        d.coeffs[0] = cl;
        search_tail(d, 1, sum, squares, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::array<DivisorClass, 8> simple_roots() {
    std::array<DivisorClass, 8> roots;
    roots[0] = DivisorClass::line() - DivisorClass::exceptional(1) - DivisorClass::exceptional(2) -
               DivisorClass::exceptional(3);
    for (int i = 1; i < 8; ++i)
        roots[i] = DivisorClass::exceptional(i) - DivisorClass::exceptional(i + 1);
    return roots;
}

std::vector<LatticeIsometry> group_closure(const GroupSpec& g, std::size_t cap) {
    if (cap < 1) throw std::invalid_argument("closure cap must be at least 1");
    std::vector<LatticeIsometry> elements{LatticeIsometry::identity()};
    std::unordered_set<LatticeIsometry, IsometryHash> seen(elements.begin(), elements.end());
    for (std::size_t next = 0; next < elements.size(); ++next) {
        for (const auto& s : g.generators) {
            LatticeIsometry y = s * elements[next];
            if (!seen.insert(y).second) continue;
            if (elements.size() >= cap)
                throw CapExceeded("group closure exceeds cap of " + std::to_string(cap) +
                                  " elements");
            elements.push_back(std::move(y));
        }
    }
    return elements;
}

}  // namespace dp1

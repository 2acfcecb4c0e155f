#pragma once

// The rank-9 Picard lattice Z^{1,8} of a degree-1 del Pezzo surface, written
// in the basis (L, E_1, ..., E_8) with the diagonal form (1, -1, ..., -1).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dp1/errors.hpp"

namespace dp1 {

inline constexpr int kRank = 9;

struct DivisorClass {
    std::array<int, kRank> coeffs{};

    static constexpr DivisorClass line() { return unit(0); }
    /// E_i for i in 1..8.
    static constexpr DivisorClass exceptional(int i) { return unit(i); }
    /// K = -3L + sum E_i.
    static constexpr DivisorClass canonical() { return {{-3, 1, 1, 1, 1, 1, 1, 1, 1}}; }

    constexpr int degree() const { return coeffs[0]; }

    constexpr DivisorClass& operator+=(const DivisorClass& o) {
        for (int i = 0; i < kRank; ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }
    constexpr DivisorClass& operator-=(const DivisorClass& o) {
        for (int i = 0; i < kRank; ++i) coeffs[i] -= o.coeffs[i];
        return *this;
    }
    friend constexpr DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend constexpr DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend constexpr DivisorClass operator-(DivisorClass a) {
        for (auto& c : a.coeffs) c = -c;
        return a;
    }
    friend constexpr DivisorClass operator*(int k, DivisorClass a) {
        for (auto& c : a.coeffs) c *= k;
        return a;
    }

    friend constexpr auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

private:
    static constexpr DivisorClass unit(int i) {
        DivisorClass d;
        d.coeffs[static_cast<std::size_t>(i)] = 1;
        return d;
    }
};

/// Intersection pairing c_L c'_L - sum c_i c'_i.
constexpr int pair(const DivisorClass& a, const DivisorClass& b) {
    int s = a.coeffs[0] * b.coeffs[0];
    for (int i = 1; i < kRank; ++i) s -= a.coeffs[i] * b.coeffs[i];
    return s;
}

/// "(c_L; c_1, ..., c_8)"
std::string to_string(const DivisorClass& d);

using Matrix9 = std::array<std::array<int, kRank>, kRank>;

Matrix9 identity_matrix();

/// True iff m preserves the pairing on all basis pairs and fixes K.
bool is_isometry(const Matrix9& m);

/// A 9x9 integer matrix acting on column coefficient vectors that preserves
/// the pairing and fixes K. Validated on construction.
class LatticeIsometry {
public:
    /// Throws std::invalid_argument unless is_isometry(m).
    explicit LatticeIsometry(const Matrix9& m);

    static LatticeIsometry identity();

    const Matrix9& matrix() const { return m_; }
    bool is_identity() const;

    DivisorClass operator()(const DivisorClass& v) const;

    /// Composition: (a * b)(v) = a(b(v)).
    friend LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b);

    /// J M^T J, the inverse of any isometry of the diagonal form J.
    LatticeIsometry inverse() const;

    friend bool operator==(const LatticeIsometry&, const LatticeIsometry&) = default;
    friend auto operator<=>(const LatticeIsometry&, const LatticeIsometry&) = default;

private:
    struct Unchecked {};
    LatticeIsometry(const Matrix9& m, Unchecked) : m_(m) {}

    Matrix9 m_;
};

struct IsometryHash {
    std::size_t operator()(const LatticeIsometry& g) const noexcept;
};

bool commute(const LatticeIsometry& a, const LatticeIsometry& b);

struct GroupSpec {
    std::vector<LatticeIsometry> generators;
    std::string label;

    static GroupSpec trivial() { return {{}, "trivial"}; }
};

/// Rank over Q of the given integer rows (fraction-free elimination).
int matrix_rank(std::vector<std::vector<std::int64_t>> rows);

/// Rank of the common fixed subspace of the generators.
int fixed_rank(const GroupSpec& g);
int fixed_rank(std::span<const LatticeIsometry> generators);
int fixed_rank(const LatticeIsometry& g);
/// Raw-matrix entry point: throws std::invalid_argument on a non-isometry.
int fixed_rank(std::span<const Matrix9> generators);

/// Rank of the image of (g - id).
int moved_rank(const LatticeIsometry& g);

/// Every v with v^2 = square and v.K = k_degree, lexicographically sorted.
/// The search range of c_L is the exact Cauchy-Schwarz bound, so the result
/// is complete; `square` must be negative (the form is hyperbolic).
std::vector<DivisorClass> vectors_with(int square, int k_degree);

/// L-E1-E2-E3, E1-E2, E2-E3, ..., E7-E8.
std::array<DivisorClass, 8> simple_roots();

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// Breadth-first closure of the generators under multiplication, identity
/// first. Throws CapExceeded once more than `cap` elements are produced.
std::vector<LatticeIsometry> group_closure(const GroupSpec& g,
                                           std::size_t cap = kDefaultClosureCap);

}  // namespace dp1

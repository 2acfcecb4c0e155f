#pragma once

// Star configurations: six exceptional curves H_1..H_6 (indices mod 6) with
// H_i.H_{i+1} = 0, H_i.H_{i+2} = 2, H_i.H_{i+3} = 3.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "dp1/curves.hpp"

namespace dp1 {

using StarTuple = std::array<CurveId, 6>;

/// Cyclically ordered star with its canonical key: the lexicographically
/// least of the 12 dihedral relabelings of the tuple.
class StarConfiguration {
public:
    /// Throws std::invalid_argument unless is_star(curves).
    explicit StarConfiguration(const StarTuple& curves);

    const StarTuple& curves() const { return curves_; }
    const StarTuple& canonical_key() const { return key_; }
    CurveId operator[](int i) const { return curves_[static_cast<std::size_t>(((i % 6) + 6) % 6)]; }
    bool contains(CurveId c) const;

    /// Stars are equal as configurations, i.e. up to dihedral relabeling.
    friend bool operator==(const StarConfiguration& a, const StarConfiguration& b) {
        return a.key_ == b.key_;
    }
    friend auto operator<=>(const StarConfiguration& a, const StarConfiguration& b) {
        return a.key_ <=> b.key_;
    }

private:
    StarTuple curves_;
    StarTuple key_;
};

/// The 12 relabelings i -> r + i and i -> r - i (mod 6), rotations first.
const std::array<std::array<int, 6>, 12>& dihedral_relabelings();

StarTuple canonical_key(const StarTuple& t);

/// True iff the ids are distinct and the cyclic (0, 2, 3) pattern holds.
bool is_star(std::span<const CurveId, 6> ids);

/// The unique star through disjoint curves a and b, with H_1 = a, H_2 = b:
/// (A, B, -K-A+B, -2K-A, -2K-B, -K+A-B). Throws std::invalid_argument unless
/// a != b and a.b = 0.
StarConfiguration star_through(CurveId a, CurveId b);

/// All stars in canonical-key order. Built once.
const std::vector<StarConfiguration>& enumerate_stars();

/// Index of a star in enumerate_stars().
std::optional<int> find_star(const StarTuple& curves);

/// Indices of the stars containing curve c.
const std::vector<int>& stars_containing(CurveId c);

/// Image of a star under a curve permutation.
StarConfiguration map_star(const StarConfiguration& s, const std::array<CurveId, kCurveCount>& perm);

struct AllOnes {
    friend bool operator==(const AllOnes&, const AllOnes&) = default;
};
/// A.H_k = A.H_{k+1} = 0, A.H_{k+2} = A.H_{k+5} = 1, A.H_{k+3} = A.H_{k+4} = 2;
/// k is a 0-based position in the star's tuple.
struct Touching {
    int k = 0;
    friend bool operator==(const Touching&, const Touching&) = default;
};
using Profile = std::variant<AllOnes, Touching>;

/// Throws std::invalid_argument if a is in s, InvariantViolation if neither
/// shape matches.
Profile profile(CurveId a, const StarConfiguration& s);

enum class PairType { Asynchronized, Synchronized, Abnormal };

inline constexpr std::array<PairType, 3> kPairTypes{PairType::Asynchronized, PairType::Synchronized,
                                                    PairType::Abnormal};

std::string_view pair_type_name(PairType t);

/// 6x6 target pairing pattern A_i.B_j for each pair type.
using PairPattern = std::array<std::array<int, 6>, 6>;
const PairPattern& pair_pattern(PairType t);

/// Whether some pair of dihedral relabelings carries the A_i.B_j matrix of
/// (s1, s2) onto the pattern of t.
bool matches_pattern(const StarConfiguration& s1, const StarConfiguration& s2, PairType t);

/// Tries every pattern under all 144 relabeling pairs; exactly one must match.
/// Throws std::invalid_argument if the stars are equal and InvariantViolation
/// on zero or several matches. Stars sharing a Bertini pair {H, bH} match no
/// pattern; every curve-disjoint pair matches exactly one.
PairType classify_pair(const StarConfiguration& s1, const StarConfiguration& s2);

enum class StarActionKind { Trivial, Faithful };

struct StarAction {
    StarConfiguration star;
    StarActionKind kind;
};

/// Stars mapped to themselves by g, tagged Trivial when all six curves are
/// fixed. Sorted by canonical key.
std::vector<StarAction> invariant_stars(const LatticeIsometry& g);

/// Order of the group of permutations of the 6 or 12 curves preserving all
/// pairings, found by backtracking.
std::uint64_t star_graph_automorphisms(std::span<const StarConfiguration> stars);

}  // namespace dp1

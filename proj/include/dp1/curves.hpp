#pragma once

// The 240 exceptional classes D (D^2 = -1, D.K = -1) on a degree-1 del Pezzo
// surface, their names, pairing table, and the Bertini involution.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dp1/lattice.hpp"

namespace dp1 {

inline constexpr int kCurveCount = 240;

using CurveId = int;

/// Families ordered by the L-coefficient 0..6 of their classes.
enum class Family { E, L2, Q, C, BQ, BL, BE };

inline constexpr std::array<Family, 7> kFamilies{Family::E,  Family::L2, Family::Q, Family::C,
                                                 Family::BQ, Family::BL, Family::BE};

std::string_view family_name(Family f);

struct ExceptionalCurve {
    CurveId id = 0;
    DivisorClass cls;
    Family family = Family::E;

    friend bool operator==(const ExceptionalCurve&, const ExceptionalCurve&) = default;
};

/// The 240 curves built from the seven closed-form families, ids assigned by
/// lexicographic order of coefficient vectors. Built once.
const std::vector<ExceptionalCurve>& enumerate_curves();

/// Closed-form family classes E_i, L_ij, Q_ijk, C_i-j, bQ_ijk, bL_ij, bE_i in
/// generation order (not sorted).
std::vector<DivisorClass> family_formula_classes();

/// Every integer solution of D^2 = -1, D.K = -1, found by bounded search over
/// the whole feasible range of the L-coefficient. Lexicographically sorted.
std::vector<DivisorClass> search_exceptional_classes();

/// Family from the L-coefficient; nullopt outside 0..6.
std::optional<Family> family_of(const DivisorClass& d);

const ExceptionalCurve& curve(CurveId id);
std::optional<CurveId> find_curve(const DivisorClass& d);

/// Pairing of two curves, via the precomputed 240x240 table.
int curve_pairing(CurveId a, CurveId b);

/// -2K - c.
CurveId bertini(CurveId c);
const ExceptionalCurve& bertini(const ExceptionalCurve& c);

/// Curves d != c with c.d = 0, ascending.
std::vector<CurveId> disjoint_partners(CurveId c);

/// Image of every curve id under g. Throws InvariantViolation if some curve
/// is not sent to a curve (impossible for a validated isometry).
std::array<CurveId, kCurveCount> curve_permutation(const LatticeIsometry& g);

/// Curve ids fixed by every given isometry.
std::vector<CurveId> invariant_curves(const LatticeIsometry& g);

/// Parses cycle notation such as "(1 2 3)(4 5 6)" over {1..8}; "()" and the
/// empty string are the identity. Returns image[i] for i in 1..8 (index 0 unused).
std::array<int, 9> parse_cycles(std::string_view cycles);

/// Isometry fixing L and permuting E_1..E_8 as the given cycles do.
LatticeIsometry s8_action(std::string_view cycles);

/// Cycle string if g fixes L and permutes the E_i, otherwise nullopt.
std::optional<std::string> as_permutation(const LatticeIsometry& g);

/// "E1", "L12", "Q123", "C1-2", "bQ123", "bL12", "bE1".
std::string curve_name(CurveId id);
/// Inverse of curve_name; throws ParseError.
CurveId parse_curve_name(std::string_view name);

}  // namespace dp1

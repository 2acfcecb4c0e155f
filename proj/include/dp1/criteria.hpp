#pragma once

// Sufficient conditions for rationality, non-rationality and minimality of a
// degree-1 del Pezzo surface, read off the action of two commuting subgroups
// of W(E8): G (automorphisms) and Gamma (the Galois image). Every positive
// answer carries a witness that replay() re-checks from scratch.
//
// "Defined over k" is modelled as "fixed by every element of Gamma". Rational
// verdicts are conditional on the surface having the point-level properties
// the lattice cannot see.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dp1/stars.hpp"
#include "dp1/weyl.hpp"

namespace dp1 {

struct ActionSetup {
    GroupSpec g_group;
    GroupSpec gamma_group;
};

/// Throws std::invalid_argument if some generator of G fails to commute with
/// some generator of Gamma.
void validate_setup(const ActionSetup& setup);

namespace rule {
inline constexpr std::string_view kRationalTwoStars = "rational-two-stars";
inline constexpr std::string_view kRationalTriple = "rational-triple";
inline constexpr std::string_view kNotRationalCarter = "not-rational-carter";
inline constexpr std::string_view kNotRationalStars = "not-rational-stars";
inline constexpr std::string_view kNotRationalEven = "not-rational-even";
}  // namespace rule

struct Witness {
    std::string rule;
    /// Generators of the group the rule was applied to.
    std::vector<LatticeIsometry> group;
    std::vector<LatticeIsometry> elements;
    std::vector<CurveId> curves;
    std::vector<StarConfiguration> stars;
};

/// An element of type A2^3 or A2^4 in the closure.
std::optional<Witness> check_not_rational_carter(const GroupSpec& gamma,
                                                 std::size_t cap = kDefaultClosureCap);

/// An order-3 element acting faithfully on at least three of its invariant
/// stars; the witness lists the first three.
std::optional<Witness> check_not_rational_stars(const GroupSpec& gamma,
                                                std::size_t cap = kDefaultClosureCap);

/// An even-order element with an invariant star on which H.gH = 3 for every
/// member H.
std::optional<Witness> check_not_rational_even(const GroupSpec& gamma,
                                               std::size_t cap = kDefaultClosureCap);

/// Gamma-fixed curves A, B, C with A.B = B.C = 1 and A.C = 0.
std::optional<Witness> check_rational_triple(const GroupSpec& gamma,
                                             std::size_t cap = kDefaultClosureCap);

/// Two pointwise Gamma-fixed stars that are asynchronized.
std::optional<Witness> check_rational_two_stars(const GroupSpec& gamma,
                                                std::size_t cap = kDefaultClosureCap);

struct MinimalityCertificate {
    /// Four <G, Gamma>-invariant, pairwise asynchronized stars.
    std::vector<StarConfiguration> stars;
    /// For each star, an order-3 element of G acting faithfully on it.
    std::vector<LatticeIsometry> faithful_elements;
    /// Directly computed rank of Pic^{<G, Gamma>}; always 1 when returned.
    int combined_rank = 0;
};

/// Throws InvariantViolation if the four stars exist but the invariant rank
/// of <G, Gamma> is not 1.
std::optional<MinimalityCertificate> check_minimal_four_stars(const ActionSetup& setup,
                                                              std::size_t cap = kDefaultClosureCap);

enum class Verdict { Rational, NotRational, Inconclusive };

std::string_view verdict_name(Verdict v);

struct InvariantRanks {
    int g = 0;
    int gamma = 0;
    int combined = 0;
};

struct RationalityVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Witness> witness;
    InvariantRanks ranks;
    std::optional<MinimalityCertificate> minimality;
};

/// Runs the rational rules then the non-rational rules on Gamma; the first hit
/// decides. Throws std::invalid_argument if G and Gamma do not commute.
RationalityVerdict rationality_report(const ActionSetup& setup, std::size_t cap = kDefaultClosureCap);

/// Re-checks a witness against its rule without reusing the search. On failure
/// returns false and, if `why` is given, a reason.
bool replay(const Witness& w, std::string* why = nullptr);
bool replay(const MinimalityCertificate& c, const ActionSetup& setup, std::string* why = nullptr);

}  // namespace dp1

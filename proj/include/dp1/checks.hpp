#pragma once

// Named end-to-end verifications replayed by `dp1 verify-lemma <name>`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dp1/criteria.hpp"

namespace dp1 {

struct CheckResult {
    bool ok = false;
    /// One-line summary on success, first counterexample on failure.
    std::string message;
};

/// DP1lines, A2A22, Davidinv, Davidintersection, 2Daviddef, Davidauto,
/// Davidmin, Davidmin1, Davidmin2, RatCor-consistency.
const std::vector<std::string_view>& check_names();

/// Throws std::invalid_argument for an unknown name.
CheckResult run_check(std::string_view name);

/// Order-3 elements commuting with g, of the form s_a s_b or a product of two
/// commuting such rotations, in deterministic search order. Singles come first.
std::vector<LatticeIsometry> commuting_order3_candidates(const LatticeIsometry& g);

/// g of type A2^3 and a commuting order-3 h moving one of the six g-invariant
/// curves; G = <g, h>, Gamma trivial.
ActionSetup minimality_setup_a2x3();

/// g of type A2^2 and a commuting order-3 h acting faithfully on both
/// pointwise g-fixed stars; G = <g, h>, Gamma trivial.
ActionSetup minimality_setup_a2x2();

}  // namespace dp1

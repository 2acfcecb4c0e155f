#pragma once

// Roots, reflections and the four order-3 classes of W(E8) acting on the
// degree-1 Picard lattice.

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dp1/lattice.hpp"

namespace dp1 {

inline constexpr int kRootCount = 240;

/// r^2 = -2 and r.K = 0.
bool is_root(const DivisorClass& v);

/// All 240 roots, lexicographically sorted; the index is the root id used by
/// reflection words.
const std::vector<DivisorClass>& enumerate_roots();

std::optional<int> find_root(const DivisorClass& v);

/// s_r(x) = x + (x.r) r. Throws std::invalid_argument if r is not a root.
LatticeIsometry reflection(const DivisorClass& r);

/// s_{i1} s_{i2} ... s_{ik} over root ids. Throws std::out_of_range on a bad id.
LatticeIsometry reflection_word(std::span<const int> root_ids);

/// s_a s_b for roots with a.b = 1: an order-3 rotation of the A2 they span.
LatticeIsometry a2_rotation(const DivisorClass& a, const DivisorClass& b);

inline constexpr int kDefaultOrderCap = 60;

/// Least n >= 1 with g^n = id. Throws CapExceeded when n would exceed cap.
int element_order(const LatticeIsometry& g, int cap = kDefaultOrderCap);

enum class CarterType3 { A2, A2x2, A2x3, A2x4 };

inline constexpr std::array<CarterType3, 4> kCarterTypes3{CarterType3::A2, CarterType3::A2x2,
                                                          CarterType3::A2x3, CarterType3::A2x4};

/// "A2", "A2x2", ...
std::string_view tag(CarterType3 t);
/// "A2", "A2^2", ...
std::string_view display_name(CarterType3 t);
/// Accepts either spelling; throws ParseError.
CarterType3 parse_carter_type(std::string_view s);

/// Invariant rank of <g> for an element of the given type: 7, 5, 3, 1.
int invariant_rank(CarterType3 t);

/// Class of an order-3 element, read off its invariant rank. Throws
/// std::invalid_argument if the order is not 3.
CarterType3 carter_type_order3(const LatticeIsometry& g);

/// A pair of roots with a.b = 1, given by root ids.
struct A2Pair {
    int a = 0;
    int b = 0;
};

/// First (in root-id order) list of `count` A2 pairs whose spans are mutually
/// orthogonal, found by depth-first search.
std::vector<A2Pair> orthogonal_a2_pairs(int count);

/// Fixed order-3 representatives: (1 2 3), (1 2 3)(4 5 6), and products of
/// three or four commuting rotations on orthogonal A2 subsystems.
const LatticeIsometry& representative_order3(CarterType3 t);

/// The Bertini involution on the lattice: x -> -x + 2 (x.K) K.
LatticeIsometry bertini_isometry();

}  // namespace dp1

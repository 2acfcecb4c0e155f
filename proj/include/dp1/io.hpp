#pragma once

// Text and JSON formats.
//
// Elements come in three textual forms, detected by the first token:
//   "(1 2 3)(4 5 6)"    cycle notation on the E-indices, L fixed
//   "s 3 17 101"        word of reflections in root ids (see list-roots)
//   81 integers         9x9 matrix, row-major, rows act on column vectors
// plus "rep:A2x4" for a built-in order-3 representative. A group is a list
// of elements separated by lines holding "---".

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dp1/criteria.hpp"

namespace dp1 {

/// Throws ParseError, including for matrices that are not isometries.
LatticeIsometry parse_element(std::string_view text);

/// Reads `arg` as a file path if one exists, otherwise as inline text.
std::string read_file_or_inline(const std::string& arg);

/// Generators separated by "---" lines; blank text is the trivial group.
GroupSpec parse_group(std::string_view text, std::string label = {});

/// 9 lines of 9 space-separated integers.
std::string format_matrix(const Matrix9& m);

/// Cycle notation when g is a permutation of the E_i, else the matrix text.
std::string format_element(const LatticeIsometry& g);

/// "{E7, E8, C7-8, bE7, bE8, C8-7}"
std::string format_star(const StarConfiguration& s);
/// Inverse of format_star; throws ParseError.
StarConfiguration parse_star(std::string_view text);

nlohmann::json element_json(const LatticeIsometry& g);
nlohmann::json star_json(const StarConfiguration& s);
nlohmann::json witness_json(const Witness& w);
nlohmann::json verdict_json(const RationalityVerdict& v);

}  // namespace dp1

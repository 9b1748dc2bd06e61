#pragma once

#include "ordspace/group.hpp"

#include <string>
#include <string_view>

namespace ordspace {

// Element expression language:
//
//   element  := term ('*' term)* | 'I'
//   term     := atom ('^' exponent)?
//   atom     := 'h[' i ',' z ',' x ']' | 'L' | 'Z' | '(' element ')'
//
// The exponent of an h-atom is a rational coefficient, of L a dyadic, of Z and
// of a parenthesised group an integer (repeated product; ^-1 is the inverse).
// Whitespace is ignored.

/// Parses and normalizes. Errors: syntax_error (with position),
/// index_out_of_range, x_out_of_range.
GroupElement parse_element(std::string_view text, const Group& group);

/// Canonical emission in normal-form order: P-part terms sorted by (i, z, x),
/// then L, then Z. The identity prints as `I`.
std::string format_element(const GroupElement& g);

} // namespace ordspace

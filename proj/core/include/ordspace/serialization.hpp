#pragma once

#include "ordspace/descriptor.hpp"
#include "ordspace/order_space.hpp"

#include <string>
#include <string_view>

namespace ordspace {

// Descriptor files hold one JSON object:
//
//   {"n": 2, "gamma": "1111", "blocks": [[1, 2]], "directions": "1",
//    "mixing": {"0": [[2, 0]]}}
//
// "mixing" maps a block position to its pair list; singleton blocks are
// omitted. Unknown keys are rejected. Blocks are sorted on read; everything
// else is checked later by validate().

/// indent < 0 gives a single line.
std::string descriptor_to_json(const OrderDescriptor& d, int indent = -1);
/// Throws format_error.
OrderDescriptor descriptor_from_json(std::string_view text);

/// [{"element": "<expression>", "sign": 1}, ...]
std::string certificate_to_json(const Certificate& c, int indent = -1);
/// Throws format_error, or the parse_element errors for bad expressions.
Certificate certificate_from_json(std::string_view text, const Group& group);

/// Ranks per partition; with_shapes additionally lists every MixShape in
/// enumeration order (only sensible for small n).
std::string rank_report_to_json(const RankReport& r, bool with_shapes, int indent = -1);

} // namespace ordspace

#include "ordspace/error.hpp"

namespace ordspace {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::arity_out_of_range: return "arity-out-of-range";
    case ErrorCode::arity_mismatch: return "arity-mismatch";
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::x_out_of_range: return "x-out-of-range";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::precision_cap_exceeded: return "precision-cap-exceeded";
    case ErrorCode::invalid_descriptor: return "invalid-descriptor";
    case ErrorCode::not_fully_mixed: return "not-fully-mixed";
    case ErrorCode::single_block: return "single-block";
    case ErrorCode::witness_exhausted: return "witness-exhaustion";
    case ErrorCode::k_out_of_range: return "k-out-of-range";
    case ErrorCode::syntax_error: return "syntax-error";
    case ErrorCode::format_error: return "format-error";
    }
    return "unknown";
}

} // namespace ordspace

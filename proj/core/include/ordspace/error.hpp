#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordspace {

enum class ErrorCode {
    arity_out_of_range,
    arity_mismatch,
    index_out_of_range,
    x_out_of_range,
    invalid_argument,
    precision_cap_exceeded,
    invalid_descriptor,
    not_fully_mixed,
    single_block,
    witness_exhausted,
    k_out_of_range,
    syntax_error,
    format_error,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every library operation. The code is stable and is
/// what callers (and the CLI exit-code mapping) should switch on.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace ordspace

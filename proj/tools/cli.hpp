#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ordspace::cli {

enum ExitCode : int {
    ok = 0,
    domain_error = 1,
    usage_error = 2,
    property_failure = 3,
};

struct Config {
    int n = 0; // 0: take it from the descriptor, else 2
    std::vector<std::uint64_t> primes;
    std::int64_t offset_bound = 2;
    unsigned precision_ceiling = 16384;
    std::size_t samples = 500;
    std::uint64_t seed = 1;
    std::string format = "text";
};

/// Runs one command line (without the program name). Output goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ordspace::cli

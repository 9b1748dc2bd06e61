#pragma once

#include "ordspace/dyadic.hpp"
#include "ordspace/rational.hpp"

#include <cstdint>
#include <span>
#include <string_view>

namespace ordspace {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign sign_of_int(long long v) { return v < 0 ? Sign::negative : (v > 0 ? Sign::positive : Sign::zero); }
inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
std::string_view to_string(Sign s);

struct PowerTerm {
    Rational coeff;
    Dyadic exp; // 0 <= exp < 1
};

struct SignOptions {
    unsigned start_precision = 64;
    unsigned precision_ceiling = 16384;
};

/// Exact sign of sum_j coeff_j * p^{exp_j} over the reals.
///
/// Terms sharing an exponent are merged first, and the sum is zero exactly when
/// every merged coefficient vanishes (the powers p^x, 0 <= x < 1 dyadic, are
/// linearly independent over Q). Otherwise the sum is enclosed by an interval
/// computed with directed rounding; the working precision doubles until the
/// interval excludes zero. Exceeding options.precision_ceiling raises
/// precision_cap_exceeded, which indicates a broken precondition such as a
/// non-prime base.
Sign linear_comb_sign(std::uint64_t p, std::span<const PowerTerm> terms, const SignOptions& options = {});

} // namespace ordspace

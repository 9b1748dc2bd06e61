#include "ordspace/exact_arith.hpp"

#include "ordspace/error.hpp"

#include <mpfr.h>

#include <map>
#include <vector>

namespace ordspace {

std::string_view to_string(Sign s)
{
    switch (s) {
    case Sign::negative: return "-1";
    case Sign::zero: return "0";
    case Sign::positive: return "1";
    }
    return "?";
}

namespace {

class Float {
public:
    explicit Float(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Float() { mpfr_clear(v_); }
    Float(const Float&) = delete;
    Float& operator=(const Float&) = delete;
    Float(Float&& o) noexcept
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

// [lo, hi] with lo <= true value <= hi.
struct Interval {
    Float lo;
    Float hi;
    explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {}
};

// Encloses p^{1/2^j} for j = 1..depth by repeated square roots. sqrt is
// monotone, so rounding the lower chain down and the upper chain up keeps
// every step a valid enclosure.
std::vector<Interval> root_ladder(std::uint64_t p, std::uint64_t depth, mpfr_prec_t prec)
{
    std::vector<Interval> out;
    out.reserve(depth + 1);
    out.emplace_back(prec);
    mpfr_set_ui(out[0].lo.get(), p, MPFR_RNDD);
    mpfr_set_ui(out[0].hi.get(), p, MPFR_RNDU);
    for (std::uint64_t j = 1; j <= depth; ++j) {
        out.emplace_back(prec);
        mpfr_sqrt(out[j].lo.get(), out[j - 1].lo.get(), MPFR_RNDD);
        mpfr_sqrt(out[j].hi.get(), out[j - 1].hi.get(), MPFR_RNDU);
    }
    return out;
}

// p^{m/2^k} = prod over set bits t of m of p^{1/2^{k-t}}; all factors positive.
void enclose_power(const Dyadic& x, const std::vector<Interval>& ladder, Interval& out)
{
    mpfr_set_ui(out.lo.get(), 1, MPFR_RNDD);
    mpfr_set_ui(out.hi.get(), 1, MPFR_RNDU);
    const std::uint64_t k = x.exponent();
    const Integer& m = x.mantissa();
    for (std::uint64_t t = 0; t < k; ++t) {
        if (mpz_tstbit(m.get_mpz_t(), t) == 0)
            continue;
        const Interval& f = ladder[k - t];
        mpfr_mul(out.lo.get(), out.lo.get(), f.lo.get(), MPFR_RNDD);
        mpfr_mul(out.hi.get(), out.hi.get(), f.hi.get(), MPFR_RNDU);
    }
}

// Returns 0 when the enclosure straddles zero at this precision.
int try_sign(std::uint64_t p, const std::map<Dyadic, Rational>& terms, mpfr_prec_t prec)
{
    std::uint64_t depth = 0;
    for (const auto& [x, c] : terms)
        depth = std::max(depth, x.exponent());
    auto ladder = root_ladder(p, depth, prec);

    Interval sum(prec), power(prec), coeff(prec);
    Float tmp(prec);
    mpfr_set_zero(sum.lo.get(), 1);
    mpfr_set_zero(sum.hi.get(), 1);
    for (const auto& [x, c] : terms) {
        enclose_power(x, ladder, power);
        mpfr_set_q(coeff.lo.get(), c.get_mpq().get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(coeff.hi.get(), c.get_mpq().get_mpq_t(), MPFR_RNDU);
        if (c.sign() > 0) {
            mpfr_mul(tmp.get(), coeff.lo.get(), power.lo.get(), MPFR_RNDD);
            mpfr_add(sum.lo.get(), sum.lo.get(), tmp.get(), MPFR_RNDD);
            mpfr_mul(tmp.get(), coeff.hi.get(), power.hi.get(), MPFR_RNDU);
            mpfr_add(sum.hi.get(), sum.hi.get(), tmp.get(), MPFR_RNDU);
        } else {
            mpfr_mul(tmp.get(), coeff.lo.get(), power.hi.get(), MPFR_RNDD);
            mpfr_add(sum.lo.get(), sum.lo.get(), tmp.get(), MPFR_RNDD);
            mpfr_mul(tmp.get(), coeff.hi.get(), power.lo.get(), MPFR_RNDU);
            mpfr_add(sum.hi.get(), sum.hi.get(), tmp.get(), MPFR_RNDU);
        }
    }
    if (mpfr_sgn(sum.lo.get()) > 0)
        return 1;
    if (mpfr_sgn(sum.hi.get()) < 0)
        return -1;
    return 0;
}

} // namespace

Sign linear_comb_sign(std::uint64_t p, std::span<const PowerTerm> terms, const SignOptions& options)
{
    if (p < 2)
        throw Error(ErrorCode::invalid_argument, "base must be at least 2");
    std::map<Dyadic, Rational> merged;
    for (const auto& t : terms) {
        if (t.exp.sign() < 0 || t.exp >= Dyadic(1))
            throw Error(ErrorCode::invalid_argument, "exponent outside [0,1): " + t.exp.to_string());
        merged[t.exp] += t.coeff;
    }
    std::erase_if(merged, [](const auto& kv) { return kv.second.is_zero(); });

    if (merged.empty())
        return Sign::zero;
    if (merged.size() == 1)
        return sign_of_int(merged.begin()->second.sign());

    for (unsigned prec = std::max(options.start_precision, 2u); prec <= options.precision_ceiling; prec *= 2) {
        int s = try_sign(p, merged, static_cast<mpfr_prec_t>(prec));
        if (s != 0)
            return sign_of_int(s);
    }
    throw Error(ErrorCode::precision_cap_exceeded,
                "sign undecided at " + std::to_string(options.precision_ceiling) + " bits (base " + std::to_string(p) + ")");
}

} // namespace ordspace

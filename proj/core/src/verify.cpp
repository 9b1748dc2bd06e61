#include "ordspace/verify.hpp"

#include "ordspace/error.hpp"
#include "ordspace/expression.hpp"
#include "ordspace/serialization.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace ordspace {

namespace {

class Tally {
public:
    Tally(std::string name, std::string subject) : start_(std::chrono::steady_clock::now())
    {
        result_.name = std::move(name);
        result_.subject = std::move(subject);
    }

    void expect(bool ok, const std::function<std::string()>& detail)
    {
        ++result_.cases;
        if (!ok)
            fail(detail());
    }

    void fail(const std::string& detail)
    {
        if (result_.failures++ == 0)
            result_.first_failure = detail;
    }

    // Runs one case; a library error counts as a failure of that case.
    template <class F>
    void guard(F&& body, const std::function<std::string()>& context)
    {
        try {
            body();
        } catch (const Error& e) {
            ++result_.cases;
            fail(context() + ": " + e.what());
        }
    }

    CheckResult finish()
    {
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return result_;
    }

private:
    CheckResult result_;
    std::chrono::steady_clock::time_point start_;
};

std::string show(const OrderDescriptor& d)
{
    return descriptor_to_json(d);
}

std::string show(const GroupElement& g)
{
    return format_element(g);
}

GroupElement h0(const Group& group, int i, std::int64_t z)
{
    return group.gen_h(i, z, Dyadic(0));
}

std::size_t block_of(const OrderDescriptor& d, int i)
{
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        if (std::find(d.blocks[b].begin(), d.blocks[b].end(), i) != d.blocks[b].end())
            return b;
    }
    throw Error(ErrorCode::index_out_of_range, "index " + std::to_string(i) + " is in no block");
}

bool has_mixed_block(const OrderDescriptor& d)
{
    return block_count_with_size_at_least(d, 2) > 0;
}

// Elements whose Archimedean comparisons are decided by power 64 at most:
// one generator per (i, z) slice, small integer coefficients, small a and b.
GroupElement tame_element(const Group& group, Sampler& rng)
{
    std::uint64_t p_max = 2;
    for (auto p : group.primes())
        p_max = std::max(p_max, p);
    const long coeff = std::max<long>(1, static_cast<long>(60 / p_max));
    const unsigned x_bits = p_max > 60 ? 0 : 2;

    GroupElement g = group.identity();
    std::set<std::pair<int, std::int64_t>> used;
    const auto terms = rng.integer(1, 3);
    for (std::int64_t t = 0; t < terms; ++t) {
        const int i = static_cast<int>(rng.integer(1, group.arity()));
        const auto z = rng.integer(-3, 3);
        if (!used.insert({i, z}).second)
            continue;
        long r = static_cast<long>(rng.integer(1, coeff));
        if (rng.coin())
            r = -r;
        g.rho.add({i, z, rng.unit_dyadic(x_bits)}, Rational(r));
    }
    const auto kind = rng.integer(0, 3);
    if (kind == 2) {
        long a = static_cast<long>(rng.integer(1, 7));
        g.a = Dyadic(Integer(rng.coin() ? a : -a), 2);
    } else if (kind == 3) {
        g.b = rng.coin() ? rng.integer(1, 2) : -rng.integer(1, 2);
        if (rng.coin())
            g.a = Dyadic(Integer(static_cast<long>(rng.integer(-7, 7))), 2);
    }
    return g;
}

// A nonidentity element of H^i with one generator per level.
GroupElement tame_factor(const Group& group, Sampler& rng, int i)
{
    GroupElement g = tame_element(group, rng);
    g.a = Dyadic(0);
    g.b = 0;
    g.rho = PElement();
    std::set<std::int64_t> levels;
    const auto terms = rng.integer(1, 2);
    for (std::int64_t t = 0; t < terms; ++t) {
        const auto z = rng.integer(-3, 3);
        if (levels.insert(z).second)
            g.rho.add({i, z, rng.unit_dyadic(1)}, Rational(rng.coin() ? 1L : -1L));
    }
    return g;
}

OrderDescriptor flip_gamma(OrderDescriptor d)
{
    for (std::size_t k = 0; k < d.gamma.size(); ++k)
        d.gamma[k] = !d.gamma[k];
    return d;
}

// Descriptors one small edit away from d; the likeliest to be confused with it.
std::vector<OrderDescriptor> neighbours(const OrderDescriptor& d)
{
    std::vector<OrderDescriptor> out;
    for (std::size_t k = 0; k < d.gamma.size(); ++k) {
        auto e = d;
        e.gamma[k] = !e.gamma[k];
        out.push_back(std::move(e));
    }
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        auto e = d;
        e.directions[b] = !e.directions[b];
        out.push_back(std::move(e));
        for (std::size_t j = 0; j < d.mixing[b].size(); ++j) {
            for (std::int64_t delta : {-2, -1, 1, 2}) {
                auto f = d;
                f.mixing[b][j].offset += delta;
                out.push_back(std::move(f));
            }
            if (j + 1 < d.mixing[b].size()) {
                auto f = d;
                std::swap(f.mixing[b][j], f.mixing[b][j + 1]);
                out.push_back(std::move(f));
            }
        }
        if (b + 1 < d.blocks.size()) {
            auto f = d;
            std::swap(f.blocks[b], f.blocks[b + 1]);
            std::swap(f.mixing[b], f.mixing[b + 1]);
            const bool t = f.directions[b];
            f.directions[b] = f.directions[b + 1];
            f.directions[b + 1] = t;
            out.push_back(std::move(f));
        }
    }
    return out;
}

} // namespace

bool much_less_by_definition(const OrderOracle& oracle, const GroupElement& g, const GroupElement& h, int cap)
{
    const Group& group = oracle.group();
    const GroupElement ag = oracle.abs(g);
    const GroupElement ah = oracle.abs(h);
    GroupElement power = ag;
    for (int k = 1; k <= cap; ++k) {
        if (oracle.compare(power, ah) != Comparison::less)
            return false;
        power = group.multiply(power, ag);
    }
    return true;
}

namespace {

bool bounded_by_power(const OrderOracle& oracle, const GroupElement& g, const GroupElement& h, int cap)
{
    const Group& group = oracle.group();
    const GroupElement ag = oracle.abs(g);
    const GroupElement ah = oracle.abs(h);
    GroupElement power = ah;
    for (int m = 1; m <= cap; ++m) {
        if (oracle.compare(ag, power) == Comparison::less)
            return true;
        power = group.multiply(power, ah);
    }
    return false;
}

} // namespace

bool equivalent_by_search(const OrderOracle& oracle, const GroupElement& g, const GroupElement& h, int cap)
{
    return bounded_by_power(oracle, g, h, cap) && bounded_by_power(oracle, h, g, cap);
}

CheckResult check_lambda_action(const Group& group, Sampler& rng, std::size_t samples)
{
    Tally t("lambda-action", "lambda^-a h^{i,r}_{z,x} lambda^a = h^{i,r p_i^m}_{z,x'}, x + a 2^z = m + x'");
    ElementSpec spec;
    spec.max_support = 6;
    spec.z_bound = 6;
    spec.x_bits = 8;
    for (std::size_t s = 0; s < samples; ++s) {
        const int i = static_cast<int>(rng.integer(1, group.arity()));
        const auto z = rng.integer(-6, 6);
        const Dyadic x = rng.unit_dyadic(static_cast<unsigned>(rng.integer(0, 8)));
        const Rational r = rng.rational(9);
        const Dyadic alpha = rng.dyadic(4, static_cast<unsigned>(rng.integer(0, 8)));
        auto context = [&] {
            return "h[" + std::to_string(i) + "," + std::to_string(z) + "," + x.to_string() + "]^" + r.to_string() +
                   " by L^" + alpha.to_string();
        };
        t.guard(
            [&] {
                const Rational shifted = x.to_rational() + alpha.to_rational() * prime_power(2, z);
                const Integer m = shifted.floor();
                const Rational frac = shifted - Rational(m);
                const GroupElement expected =
                    group.gen_h(i, z, Dyadic::from_rational(frac), r * prime_power(group.prime(i), m.get_si()));
                const GroupElement got = group.conjugate(group.gen_h(i, z, x, r), group.gen_lambda(alpha));
                t.expect(got == expected, [&] { return context() + " gave " + show(got) + ", expected " + show(expected); });

                const PElement rho = rng.p_element(group, spec);
                const PElement other = rng.p_element(group, spec);
                const Dyadic beta = rng.dyadic(4, static_cast<unsigned>(rng.integer(0, 8)));
                t.expect(conj_p_by_lambda(conj_p_by_lambda(rho, alpha, group.primes()), beta, group.primes()) ==
                             conj_p_by_lambda(rho, alpha + beta, group.primes()),
                         [&] { return context() + ": action does not compose"; });
                t.expect(conj_p_by_lambda(rho + other, alpha, group.primes()) ==
                             conj_p_by_lambda(rho, alpha, group.primes()) + conj_p_by_lambda(other, alpha, group.primes()),
                         [&] { return context() + ": action is not additive"; });
                t.expect(group.conjugate(group.from_p(rho), group.gen_lambda(alpha)).rho ==
                             conj_p_by_lambda(rho, alpha, group.primes()),
                         [&] { return context() + ": conjugation disagrees with the action"; });
            },
            context);
    }
    return t.finish();
}

CheckResult check_zeta_action(const Group& group, Sampler& rng, std::size_t samples)
{
    Tally t("zeta-action", "zeta^-b h^{i,r}_{z,x} zeta^b = h^{i,r}_{z+b,x}; zeta^-b lambda^a zeta^b = lambda^{a/2^b}");
    ElementSpec spec;
    spec.max_support = 6;
    spec.z_bound = 6;
    for (std::size_t s = 0; s < samples; ++s) {
        const int i = static_cast<int>(rng.integer(1, group.arity()));
        const auto z = rng.integer(-6, 6);
        const auto beta = rng.integer(-6, 6);
        const Dyadic x = rng.unit_dyadic(static_cast<unsigned>(rng.integer(0, 8)));
        const Rational r = rng.rational(9);
        const Dyadic alpha = rng.dyadic(4, static_cast<unsigned>(rng.integer(0, 8)));
        auto context = [&] { return "beta = " + std::to_string(beta) + ", alpha = " + alpha.to_string(); };
        t.guard(
            [&] {
                const GroupElement got = group.conjugate(group.gen_h(i, z, x, r), group.gen_zeta(beta));
                const GroupElement expected = group.gen_h(i, z + beta, x, r);
                t.expect(got == expected, [&] { return context() + ": h gave " + show(got); });

                const GroupElement lam = group.conjugate(group.gen_lambda(alpha), group.gen_zeta(beta));
                const GroupElement lam_expected =
                    group.gen_lambda(Dyadic::from_rational(alpha.to_rational() * prime_power(2, -beta)));
                t.expect(lam == lam_expected, [&] { return context() + ": lambda gave " + show(lam); });

                const PElement rho = rng.p_element(group, spec);
                const auto gamma = rng.integer(-6, 6);
                t.expect(conj_p_by_zeta(conj_p_by_zeta(rho, beta), gamma) == conj_p_by_zeta(rho, beta + gamma),
                         [&] { return context() + ": shift does not compose"; });
                t.expect(group.conjugate(group.from_p(rho), group.gen_zeta(beta)).rho == conj_p_by_zeta(rho, beta),
                         [&] { return context() + ": conjugation disagrees with the shift"; });
            },
            context);
    }
    return t.finish();
}

CheckResult check_group_axioms(const Group& group, Sampler& rng, std::size_t samples, std::size_t max_support)
{
    Tally t("group-axioms", "associativity, identity, inverses, conjugate = k^-1 g k");
    ElementSpec spec;
    spec.max_support = max_support;
    spec.p_only = 0.2;
    const GroupElement e = group.identity();
    for (std::size_t s = 0; s < samples; ++s) {
        const GroupElement g = rng.element(group, spec);
        const GroupElement h = rng.element(group, spec);
        const GroupElement k = rng.element(group, spec);
        auto context = [&] { return show(g) + " ; " + show(h) + " ; " + show(k); };
        t.guard(
            [&] {
                t.expect(group.multiply(group.multiply(g, h), k) == group.multiply(g, group.multiply(h, k)),
                         [&] { return "associativity fails for " + context(); });
                t.expect(group.multiply(g, e) == g && group.multiply(e, g) == g,
                         [&] { return "identity fails for " + show(g); });
                const GroupElement gi = group.invert(g);
                t.expect(group.multiply(g, gi).is_identity() && group.multiply(gi, g).is_identity(),
                         [&] { return "inverse fails for " + show(g); });
                t.expect(group.invert(gi) == g, [&] { return "double inverse fails for " + show(g); });
                t.expect(group.conjugate(g, k) == group.multiply(group.multiply(group.invert(k), g), k),
                         [&] { return "conjugate fails for " + context(); });
            },
            context);
    }
    return t.finish();
}

CheckResult check_order_axioms(const Group& group, const std::vector<OrderDescriptor>& ds, Sampler& rng,
                               std::size_t pairs, const SignOptions& sign)
{
    Tally t("order-axioms", "trichotomy, antisymmetry, P.P in P, k^-1 P k = P");
    ElementSpec spec;
    for (const auto& d : ds) {
        const OrderOracle o(group, d, sign);
        for (std::size_t s = 0; s < pairs; ++s) {
            const GroupElement g = rng.element(group, spec);
            const GroupElement h = rng.element(group, spec);
            auto context = [&] { return show(d) + " on " + show(g) + " ; " + show(h); };
            t.guard(
                [&] {
                    const Sign sg = o.sign_of(g);
                    const Sign sh = o.sign_of(h);
                    t.expect((sg == Sign::zero) == g.is_identity(), [&] { return "trichotomy: " + context(); });
                    t.expect(o.sign_of(group.invert(g)) == -sg, [&] { return "antisymmetry: " + context(); });
                    if (sg == Sign::positive && sh == Sign::positive)
                        t.expect(o.sign_of(group.multiply(g, h)) == Sign::positive,
                                 [&] { return "cone closure: " + context(); });
                    t.expect(o.sign_of(group.conjugate(g, h)) == sg, [&] { return "conjugation: " + context(); });
                    const Comparison gh = o.compare(g, h);
                    const Comparison hg = o.compare(h, g);
                    const bool mirrored = (gh == Comparison::less && hg == Comparison::greater) ||
                                          (gh == Comparison::greater && hg == Comparison::less) ||
                                          (gh == Comparison::equal && hg == Comparison::equal && g == h);
                    t.expect(mirrored, [&] { return "compare not antisymmetric: " + context(); });
                },
                context);
        }
    }
    return t.finish();
}

CheckResult check_slice_order(const Group& group, const std::vector<OrderDescriptor>& ds, Sampler& rng,
                              std::size_t samples, const SignOptions& sign)
{
    Tally t("slice-order", "H^i_z is ordered by sum r_j p_i^x_j, up to the dual");
    if (ds.empty())
        return t.finish();
    for (std::size_t s = 0; s < samples; ++s) {
        const OrderDescriptor& d = ds[rng.index(ds.size())];
        const int i = static_cast<int>(rng.integer(1, d.n));
        const auto z = rng.integer(-4, 4);
        std::vector<PowerTerm> terms;
        PElement rho;
        const auto count = rng.integer(1, 4);
        for (std::int64_t k = 0; k < count; ++k) {
            PowerTerm term{rng.rational(6), rng.unit_dyadic(static_cast<unsigned>(rng.integer(0, 4)))};
            rho.add({i, z, term.exp}, term.coeff);
            terms.push_back(term);
        }
        const GroupElement g = group.from_p(rho);
        auto context = [&] { return show(d) + " on " + show(g); };
        t.guard(
            [&] {
                const OrderOracle o(group, d, sign);
                const Sign real = linear_comb_sign(group.prime(i), terms, sign);
                const Sign expected = d.gamma[static_cast<std::size_t>(i - 1)] ? real : -real;
                t.expect(o.sign_of(g) == expected, [&] { return "slice sign: " + context(); });

                OrderDescriptor dual = d;
                dual.gamma[static_cast<std::size_t>(i - 1)] = !dual.gamma[static_cast<std::size_t>(i - 1)];
                t.expect(OrderOracle(group, dual, sign).sign_of(g) == -expected,
                         [&] { return "flipped bit does not negate: " + context(); });

                // Terms of lower classes never change the verdict.
                const int j = static_cast<int>(rng.integer(1, d.n));
                const auto w = rng.integer(-6, 6);
                if (o.index_key(j, w) < o.index_key(i, z) && !g.is_identity()) {
                    GroupElement noisy = g;
                    noisy.rho.add({j, w, rng.unit_dyadic(3)}, rng.rational(50));
                    t.expect(o.sign_of(noisy) == expected, [&] { return "lower term changed sign: " + context(); });
                }
            },
            context);
    }
    return t.finish();
}

CheckResult check_class_ladder(const Group& group, const std::vector<OrderDescriptor>& ds, std::int64_t z_bound)
{
    Tally t("class-ladder", "h^i_{z,0} << h^i_{z+1,0} << lambda << zeta (reversed in z for negative blocks)");
    const GroupElement lambda = group.gen_lambda(Dyadic(1));
    const GroupElement zeta = group.gen_zeta(1);
    for (const auto& d : ds) {
        t.guard(
            [&] {
                const OrderOracle o(group, d);
                t.expect(much_less_by_definition(o, lambda, zeta), [&] { return "lambda !<< zeta: " + show(d); });
                for (int i = 1; i <= d.n; ++i) {
                    const bool up = d.directions[block_of(d, i)];
                    for (std::int64_t z = -z_bound; z <= z_bound; ++z) {
                        const GroupElement lo = h0(group, i, up ? z : z + 1);
                        const GroupElement hi = h0(group, i, up ? z + 1 : z);
                        auto context = [&] { return show(d) + " at i=" + std::to_string(i) + ", z=" + std::to_string(z); };
                        t.expect(much_less_by_definition(o, lo, hi) && o.arch_compare(lo, hi) == ArchComparison::much_less,
                                 [&] { return "ladder step: " + context(); });
                        t.expect(much_less_by_definition(o, h0(group, i, z), lambda),
                                 [&] { return "not below lambda: " + context(); });
                    }
                }
            },
            [&] { return show(d); });
    }
    return t.finish();
}

CheckResult check_factor_classes_distinct(const Group& group, const std::vector<OrderDescriptor>& ds,
                                          std::int64_t bound)
{
    Tally t("factor-classes-distinct", "h^i_{u,0} and h^j_{v,0} are never equivalent for i != j");
    for (const auto& d : ds) {
        t.guard(
            [&] {
                const OrderOracle o(group, d);
                for (int i = 1; i <= d.n; ++i) {
                    for (int j = i + 1; j <= d.n; ++j) {
                        for (std::int64_t u = -bound; u <= bound; ++u) {
                            for (std::int64_t v = -bound; v <= bound; ++v) {
                                const GroupElement g = h0(group, i, u);
                                const GroupElement h = h0(group, j, v);
                                const ArchComparison c = o.arch_compare(g, h);
                                auto context = [&] {
                                    return show(d) + " h[" + std::to_string(i) + "," + std::to_string(u) + "] vs h[" +
                                           std::to_string(j) + "," + std::to_string(v) + "]";
                                };
                                const bool ok = c == ArchComparison::much_less     ? much_less_by_definition(o, g, h)
                                                : c == ArchComparison::much_greater ? much_less_by_definition(o, h, g)
                                                                                    : false;
                                t.expect(ok, context);
                            }
                        }
                    }
                }
            },
            [&] { return show(d); });
    }
    return t.finish();
}

CheckResult check_mixed_interleaving(const Group& group, const std::vector<OrderDescriptor>& ds, std::int64_t window)
{
    Tally t("mixed-interleaving",
            "h^{i0}_{0,0} << h^{i1}_{u1,0} << ... << h^{i0}_{+-1,0}, each u_j the only fitting level");
    for (const auto& d : ds) {
        t.guard(
            [&] {
                const OrderOracle o(group, d);
                for (std::size_t b = 0; b < d.blocks.size(); ++b) {
                    if (d.mixing[b].empty())
                        continue;
                    const int least = d.blocks[b].front();
                    const GroupElement first = h0(group, least, 0);
                    const GroupElement last = h0(group, least, d.directions[b] ? 1 : -1);
                    std::vector<GroupElement> chain{first};
                    for (const auto& pair : d.mixing[b])
                        chain.push_back(h0(group, pair.index, pair.offset));
                    chain.push_back(last);
                    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
                        t.expect(much_less_by_definition(o, chain[k], chain[k + 1]), [&] {
                            return show(d) + ": chain link " + std::to_string(k) + " fails";
                        });
                    for (const auto& pair : d.mixing[b]) {
                        for (std::int64_t w = pair.offset - window; w <= pair.offset + window; ++w) {
                            const GroupElement g = h0(group, pair.index, w);
                            const bool inside = much_less_by_definition(o, first, g) && much_less_by_definition(o, g, last);
                            const bool outside = much_less_by_definition(o, g, first) || much_less_by_definition(o, last, g);
                            const bool ok = w == pair.offset ? inside : (!inside && outside);
                            t.expect(ok, [&] {
                                return show(d) + ": level " + std::to_string(w) + " of index " + std::to_string(pair.index) +
                                       (inside ? " fits" : " does not fit");
                            });
                        }
                    }
                }
            },
            [&] { return show(d); });
    }
    return t.finish();
}

CheckResult check_same_direction(const Group& group, const std::vector<OrderDescriptor>& ds, std::int64_t z_bound)
{
    Tally t("same-direction", "every index of a mixed block moves in the block's direction");
    for (const auto& d : ds) {
        t.guard(
            [&] {
                const OrderOracle o(group, d);
                for (std::size_t b = 0; b < d.blocks.size(); ++b) {
                    if (d.blocks[b].size() < 2)
                        continue;
                    for (int i : d.blocks[b]) {
                        for (std::int64_t z = -z_bound; z <= z_bound; ++z) {
                            const bool up = much_less_by_definition(o, h0(group, i, z), h0(group, i, z + 1));
                            const bool down = much_less_by_definition(o, h0(group, i, z + 1), h0(group, i, z));
                            t.expect(up == static_cast<bool>(d.directions[b]) && down == !d.directions[b], [&] {
                                return show(d) + ": index " + std::to_string(i) + " at z=" + std::to_string(z);
                            });
                        }
                    }
                }
            },
            [&] { return show(d); });
    }
    return t.finish();
}

CheckResult check_archimedean_facts(const Group& group, const std::vector<OrderDescriptor>& ds, Sampler& rng,
                                    std::size_t samples)
{
    Tally t("archimedean-facts", "~ and << under products, inverses and transitivity; verdicts match the definitions");
    if (ds.empty())
        return t.finish();
    const GroupElement e = group.identity();
    for (std::size_t s = 0; s < samples; ++s) {
        const OrderDescriptor& d = ds[rng.index(ds.size())];
        GroupElement g = tame_element(group, rng);
        GroupElement h = tame_element(group, rng);
        GroupElement k = tame_element(group, rng);
        if (g.is_identity() || h.is_identity() || k.is_identity())
            continue;
        auto context = [&] { return show(d) + " on " + show(g) + " ; " + show(h) + " ; " + show(k); };
        t.guard(
            [&] {
                const OrderOracle o(group, d);
                auto cmp = [&](const GroupElement& a, const GroupElement& b) { return o.arch_compare(a, b); };
                const auto less = ArchComparison::much_less;
                const auto same = ArchComparison::equivalent;

                t.expect(cmp(g, g) == same && cmp(g, group.invert(g)) == same, [&] { return "reflexive: " + context(); });
                t.expect(equivalent_by_search(o, g, group.invert(g)), [&] { return "g ~ g^-1 by search: " + context(); });

                const ArchComparison c = cmp(g, h);
                const bool definitional = c == less                          ? much_less_by_definition(o, g, h)
                                          : c == ArchComparison::much_greater ? much_less_by_definition(o, h, g)
                                                                              : equivalent_by_search(o, g, h);
                t.expect(definitional, [&] { return std::string("verdict ") + std::string(to_string(c)) + ": " + context(); });

                if (cmp(g, k) == less && cmp(h, k) == less)
                    t.expect(cmp(group.multiply(g, h), k) == less, [&] { return "closure: " + context(); });
                if (c == less) {
                    t.expect(cmp(group.multiply(g, h), h) == same && cmp(group.multiply(h, g), h) == same,
                             [&] { return "absorption: " + context(); });
                    if (cmp(h, k) == less)
                        t.expect(cmp(g, k) == less, [&] { return "transitivity: " + context(); });
                }
                t.expect(cmp(e, g) == less, [&] { return "identity not least: " + context(); });

                // Product over distinct factors H^1..H^n lies in the largest factor's class.
                GroupElement product = e;
                GroupElement top = e;
                for (int i = 1; i <= d.n; ++i) {
                    const GroupElement a = tame_factor(group, rng, i);
                    if (a.is_identity())
                        continue;
                    product = group.multiply(product, a);
                    if (top.is_identity() || cmp(top, a) == less)
                        top = a;
                }
                if (!top.is_identity()) {
                    t.expect(o.arch_class(product) == o.arch_class(top) && equivalent_by_search(o, product, top),
                             [&] { return "product class: " + show(product) + " vs " + show(top) + " under " + show(d); });
                }
            },
            context);
    }
    return t.finish();
}

CheckResult check_duality(const Group& group, const std::vector<OrderDescriptor>& ds, Sampler& rng,
                          std::size_t samples)
{
    Tally t("duality", "the all-flipped gamma gives the opposite order with the same classes");
    if (ds.empty())
        return t.finish();
    ElementSpec spec;
    for (std::size_t s = 0; s < samples; ++s) {
        const OrderDescriptor& d = ds[rng.index(ds.size())];
        const GroupElement g = rng.element(group, spec);
        auto context = [&] { return show(d) + " on " + show(g); };
        t.guard(
            [&] {
                const OrderOracle o(group, d);
                const OrderOracle dual(group, flip_gamma(d));
                t.expect(dual.sign_of(g) == -o.sign_of(g), [&] { return "sign: " + context(); });
                t.expect(dual.arch_class(g) == o.arch_class(g), [&] { return "class: " + context(); });
            },
            context);
    }
    return t.finish();
}

CheckResult check_enumeration(int n, std::int64_t offset_bound)
{
    Tally t("enumeration", "enumerate(n, B) lists each valid descriptor once; count = closed form");
    t.guard(
        [&] {
            const std::uint64_t expected = enumeration_count(n, offset_bound);
            DescriptorEnumerator cursor(n, offset_bound);
            std::set<OrderDescriptor> seen;
            std::set<MixShape> shapes;
            std::uint64_t total = 0;
            const bool dedupe = expected <= 200000;
            while (auto d = cursor.next()) {
                ++total;
                if (auto v = validate(*d))
                    t.expect(false, [&] { return v->clause + " in " + show(*d); });
                if (dedupe && !seen.insert(*d).second)
                    t.expect(false, [&] { return "duplicate " + show(*d); });
                if (dedupe)
                    shapes.insert(shape_of(*d));
            }
            t.expect(total == expected, [&] {
                return "listed " + std::to_string(total) + ", closed form " + std::to_string(expected);
            });
            if (dedupe)
                t.expect(shapes.size() == enumerate_shapes(n).size(), [&] { return "some shape never listed"; });
            t.expect(enumeration_count(n, offset_bound + 1) >= expected, [&] { return "count not monotone in B"; });
        },
        [&] { return "n=" + std::to_string(n) + ", B=" + std::to_string(offset_bound); });
    return t.finish();
}

CheckResult check_injectivity(const Group& group, const std::vector<OrderDescriptor>& ds, std::int64_t z_bound)
{
    Tally t("injectivity", "distinct descriptors give distinct orders");
    std::vector<GroupElement> probes{group.gen_lambda(Dyadic(1)), group.gen_zeta(1)};
    std::vector<GroupElement> gens;
    for (int i = 1; i <= group.arity(); ++i) {
        for (std::int64_t z = -z_bound; z <= z_bound; ++z)
            gens.push_back(h0(group, i, z));
    }
    probes.insert(probes.end(), gens.begin(), gens.end());
    for (std::size_t a = 0; a < gens.size(); ++a) {
        const GroupElement ai = group.invert(gens[a]);
        for (std::size_t b = 0; b < gens.size(); ++b) {
            if (a == b)
                continue;
            probes.push_back(group.multiply(ai, gens[b]));
            // Quotients alone cannot tell apart two orders in which h^i and h^j
            // have opposite signs; the product settles which one dominates.
            if (a < b)
                probes.push_back(group.multiply(gens[a], gens[b]));
        }
    }

    std::map<std::vector<signed char>, std::size_t> owner;
    for (std::size_t k = 0; k < ds.size(); ++k) {
        t.guard(
            [&] {
                const OrderOracle o(group, ds[k]);
                std::vector<signed char> signature;
                signature.reserve(probes.size());
                for (const auto& p : probes)
                    signature.push_back(static_cast<signed char>(to_int(o.sign_of(p))));
                auto [it, fresh] = owner.emplace(std::move(signature), k);
                t.expect(fresh || ds[it->second] == ds[k],
                         [&] { return show(ds[it->second]) + " and " + show(ds[k]) + " are not separated"; });
            },
            [&] { return show(ds[k]); });
    }
    return t.finish();
}

CheckResult check_isolation(const Group& group, const std::vector<OrderDescriptor>& fully_mixed,
                            const std::vector<OrderDescriptor>& universe)
{
    Tally t("isolation", "a fully mixed order is the only one satisfying its certificate");
    std::vector<OrderOracle> oracles;
    oracles.reserve(universe.size());
    for (const auto& u : universe)
        oracles.emplace_back(group, u);
    for (const auto& d : fully_mixed) {
        t.guard(
            [&] {
                const Certificate c = isolation_certificate(group, d);
                t.expect(agrees(group, d, c), [&] { return show(d) + " violates its own certificate"; });
                for (const auto& o : oracles) {
                    if (o.descriptor() == d)
                        continue;
                    if (agrees(o, c)) {
                        t.expect(false, [&] { return show(o.descriptor()) + " also satisfies the certificate of " + show(d); });
                        break;
                    }
                }
                for (const auto& e : neighbours(d)) {
                    if (!validate(e) && e != d && agrees(group, e, c)) {
                        t.expect(false, [&] { return "neighbour " + show(e) + " satisfies the certificate of " + show(d); });
                        break;
                    }
                }
                t.expect(true, [] { return std::string(); });
            },
            [&] { return show(d); });
    }
    return t.finish();
}

CheckResult check_limit_points(const Group& group, const std::vector<OrderDescriptor>& ds, Sampler& rng,
                               std::size_t certificates, std::size_t count, std::int64_t z_bound)
{
    Tally t("limit-points", "every neighbourhood of a non-fully-mixed order holds more mixed orders");
    ElementSpec spec;
    spec.z_bound = z_bound;
    spec.p_only = 0.6;
    for (const auto& d : ds) {
        const OrderOracle o(group, d);
        for (std::size_t s = 0; s < certificates; ++s) {
            Certificate c;
            const auto size = rng.integer(1, 6);
            for (std::int64_t k = 0; k < size; ++k) {
                GroupElement g = rng.coin(0.3) ? h0(group, static_cast<int>(rng.integer(1, group.arity())),
                                                    rng.integer(-z_bound, z_bound))
                                               : rng.element(group, spec);
                if (g.is_identity() ||
                    std::any_of(c.begin(), c.end(), [&](const SignedElement& e) { return e.element == g; }))
                    continue;
                const Sign sg = o.sign_of(g);
                c.push_back({std::move(g), sg});
            }
            auto context = [&] { return show(d) + " with " + certificate_to_json(c); };
            t.guard(
                [&] {
                    const auto witnesses = limit_witness(group, d, c, count);
                    t.expect(witnesses.size() == count, [&] { return "wrong witness count: " + context(); });
                    for (std::size_t a = 0; a < witnesses.size(); ++a) {
                        const auto& w = witnesses[a];
                        t.expect(!validate(w) && more_mixed(d, w) && agrees(group, w, c),
                                 [&] { return "bad witness " + show(w) + ": " + context(); });
                        for (std::size_t b = 0; b < a; ++b)
                            t.expect(witnesses[b] != w, [&] { return "repeated witness: " + context(); });
                    }
                },
                context);
        }
    }
    return t.finish();
}

CheckResult check_cb_rank(int n)
{
    Tally t("cb-rank", "model derivative reaches the empty set at stage n; O_k sits at rank n - k");
    t.guard(
        [&] {
            const RankReport r = cb_model(n);
            t.expect(r.space_rank == n, [&] { return "space rank " + std::to_string(r.space_rank); });
            for (int k = 1; k <= n; ++k) {
                Partition p(1);
                for (int i = 1; i <= k; ++i)
                    p[0].push_back(i);
                for (int i = k + 1; i <= n; ++i)
                    p.push_back({i});
                const auto it = r.partition_ranks.find(p);
                t.expect(it != r.partition_ranks.end() && it->second == n - k,
                         [&] { return "O_" + std::to_string(k) + " shapes have the wrong rank"; });
            }
            for (const auto& [fine, fine_rank] : r.partition_ranks) {
                for (const auto& [coarse, coarse_rank] : r.partition_ranks) {
                    if (more_mixed(MixShape{n, {}, fine, {}, {}}, MixShape{n, {}, coarse, {}, {}}))
                        t.expect(coarse_rank < fine_rank, [&] { return "rank not monotone in mixing"; });
                }
            }
        },
        [&] { return "n=" + std::to_string(n); });
    return t.finish();
}

std::vector<OrderDescriptor> ok_descriptors(int n, std::int64_t offset_bound)
{
    std::vector<OrderDescriptor> out;
    for (int k = 1; k < n; ++k) {
        OrderDescriptor d;
        d.n = n;
        d.gamma.assign(static_cast<std::size_t>(n) + 2, true);
        d.blocks.emplace_back();
        for (int i = 1; i <= k; ++i)
            d.blocks[0].push_back(i);
        for (int i = k + 1; i <= n; ++i)
            d.blocks.push_back({i});
        d.directions.assign(d.blocks.size(), true);
        d.mixing.assign(d.blocks.size(), {});
        for (int i = 2; i <= k; ++i)
            d.mixing[0].push_back({i, -offset_bound});
        while (true) {
            out.push_back(d);
            std::size_t j = 0;
            while (j < d.mixing[0].size() && d.mixing[0][j].offset == offset_bound)
                d.mixing[0][j++].offset = -offset_bound;
            if (j == d.mixing[0].size())
                break;
            ++d.mixing[0][j].offset;
        }
    }
    return out;
}

std::vector<std::string> verify_check_names()
{
    return {"lambda-action",   "zeta-action",        "group-axioms",   "order-axioms",
            "slice-order",     "class-ladder",       "factor-classes-distinct",
            "mixed-interleaving", "same-direction",  "archimedean-facts", "duality",
            "enumeration",     "injectivity",        "isolation",      "limit-points",
            "cb-rank"};
}

namespace {

std::uint64_t name_seed(std::uint64_t seed, const std::string& name)
{
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (unsigned char ch : name) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

constexpr std::uint64_t enumerate_limit = 20000;

// Largest B' <= B whose enumeration stays under limit, or -1.
std::int64_t affordable_bound(int n, std::int64_t offset_bound, std::uint64_t limit)
{
    for (std::int64_t b = offset_bound; b >= 0; --b) {
        if (enumeration_count(n, b) <= limit)
            return b;
    }
    return -1;
}

class Pool {
public:
    Pool(int n, std::int64_t offset_bound) : n_(n), bound_(offset_bound)
    {
        if (enumeration_count(n, offset_bound) <= enumerate_limit)
            all_ = enumerate(n, offset_bound);
    }

    const std::vector<OrderDescriptor>& all() const { return all_; }

    std::vector<OrderDescriptor> sample(Sampler& rng, std::size_t count,
                                        const std::function<bool(const OrderDescriptor&)>& keep = {}) const
    {
        std::vector<OrderDescriptor> source;
        if (!all_.empty()) {
            for (const auto& d : all_) {
                if (!keep || keep(d))
                    source.push_back(d);
            }
            if (source.size() <= count)
                return source;
            std::shuffle(source.begin(), source.end(), rng.engine());
            source.resize(count);
            std::sort(source.begin(), source.end());
            return source;
        }
        std::set<OrderDescriptor> picked;
        for (std::size_t attempts = 0; picked.size() < count && attempts < 50 * count + 100; ++attempts) {
            OrderDescriptor d = rng.descriptor(n_, bound_);
            if (!keep || keep(d))
                picked.insert(std::move(d));
        }
        return {picked.begin(), picked.end()};
    }

private:
    int n_;
    std::int64_t bound_;
    std::vector<OrderDescriptor> all_;
};

} // namespace

std::vector<CheckResult> run_verify(const VerifyConfig& config)
{
    const Group group = config.primes.empty() ? Group(config.n) : Group(config.n, config.primes);
    const int n = config.n;
    const std::int64_t B = config.offset_bound;
    const std::size_t samples = config.samples;
    const Pool pool(n, B);
    const std::size_t small = std::min<std::size_t>(64, std::max<std::size_t>(1, samples / 8));

    std::vector<CheckResult> out;
    auto rng_for = [&](const std::string& name) { return Sampler(name_seed(config.seed, name)); };

    {
        auto rng = rng_for("lambda-action");
        out.push_back(check_lambda_action(group, rng, samples));
    }
    {
        auto rng = rng_for("zeta-action");
        out.push_back(check_zeta_action(group, rng, samples));
    }
    {
        auto rng = rng_for("group-axioms");
        out.push_back(check_group_axioms(group, rng, samples));
    }
    {
        auto rng = rng_for("order-axioms");
        const auto ds = pool.sample(rng, small);
        out.push_back(check_order_axioms(group, ds, rng, std::max<std::size_t>(1, samples / 10), config.sign));
    }
    {
        auto rng = rng_for("slice-order");
        const auto ds = pool.sample(rng, small);
        out.push_back(check_slice_order(group, ds, rng, samples, config.sign));
    }
    {
        auto rng = rng_for("class-ladder");
        out.push_back(check_class_ladder(group, pool.sample(rng, small)));
    }
    {
        auto rng = rng_for("factor-classes-distinct");
        out.push_back(check_factor_classes_distinct(group, pool.sample(rng, small)));
    }
    {
        auto rng = rng_for("mixed-interleaving");
        const auto ds = pool.sample(rng, std::max<std::size_t>(1, samples), has_mixed_block);
        out.push_back(check_mixed_interleaving(group, ds));
    }
    {
        auto rng = rng_for("same-direction");
        out.push_back(check_same_direction(group, pool.sample(rng, small, has_mixed_block)));
    }
    {
        auto rng = rng_for("archimedean-facts");
        const auto ds = pool.sample(rng, small);
        out.push_back(check_archimedean_facts(group, ds, rng, samples));
    }
    {
        auto rng = rng_for("duality");
        const auto ds = pool.sample(rng, small);
        out.push_back(check_duality(group, ds, rng, samples));
    }
    {
        const std::int64_t b = affordable_bound(n, B, 2000000);
        if (b >= 0) {
            out.push_back(check_enumeration(n, b));
        } else {
            CheckResult skipped;
            skipped.name = "enumeration";
            skipped.subject = "enumeration too large at this n";
            skipped.skipped = true;
            out.push_back(skipped);
        }
    }
    {
        auto rng = rng_for("injectivity");
        const std::int64_t b = affordable_bound(n, B, 5000);
        if (b >= 0) {
            out.push_back(check_injectivity(group, enumerate(n, b), b + 1));
        } else {
            out.push_back(check_injectivity(group, pool.sample(rng, std::min<std::size_t>(samples, 2000)), B + 1));
        }
    }
    {
        auto rng = rng_for("isolation");
        auto fully = pool.sample(rng, n == 2 ? samples : std::min<std::size_t>(20, samples),
                                 [](const OrderDescriptor& d) { return d.blocks.size() == 1; });
        std::vector<OrderDescriptor> universe;
        if (enumeration_count(n, B + 2) <= enumerate_limit) {
            universe = enumerate(n, B + 2);
        } else {
            Pool wide(n, B + 2);
            universe = wide.sample(rng, samples);
        }
        out.push_back(check_isolation(group, fully, universe));
    }
    {
        auto rng = rng_for("limit-points");
        const auto ds = ok_descriptors(n, std::min<std::int64_t>(B, 2));
        const std::size_t per = std::clamp<std::size_t>(samples / std::max<std::size_t>(1, ds.size()), 1, 50);
        out.push_back(check_limit_points(group, ds, rng, per));
    }
    out.push_back(check_cb_rank(n));
    return out;
}

} // namespace ordspace

#include "cli.hpp"

#include "ordspace/error.hpp"
#include "ordspace/expression.hpp"
#include "ordspace/serialization.hpp"
#include "ordspace/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace ordspace::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Invocation {
    Config config;
    std::string descriptor_path;
    std::string certificate_path;
    std::vector<std::string> expressions;
    bool count_only = false;
    std::size_t witness_count = 5;
    int k = 0;
    bool shapes = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

class Session {
public:
    Session(const Invocation& inv, std::ostream& out) : inv_(inv), out_(out) {}

    bool json() const { return inv_.config.format == "json"; }

    const OrderDescriptor& descriptor()
    {
        if (!descriptor_) {
            if (inv_.descriptor_path.empty())
                throw UsageError("this command needs -d <descriptor.json>");
            descriptor_ = descriptor_from_json(read_file(inv_.descriptor_path));
        }
        return *descriptor_;
    }

    int arity()
    {
        if (!inv_.descriptor_path.empty()) {
            const int n = descriptor().n;
            if (inv_.config.n != 0 && inv_.config.n != n)
                throw Error(ErrorCode::arity_mismatch, "-n " + std::to_string(inv_.config.n) +
                                                           " but the descriptor has n = " + std::to_string(n));
            return n;
        }
        return inv_.config.n != 0 ? inv_.config.n : 2;
    }

    const Group& group()
    {
        if (!group_) {
            const int n = arity();
            group_ = inv_.config.primes.empty() ? Group(n) : Group(n, inv_.config.primes);
        }
        return *group_;
    }

    OrderOracle oracle()
    {
        SignOptions sign;
        sign.precision_ceiling = inv_.config.precision_ceiling;
        return OrderOracle(group(), descriptor(), sign);
    }

    std::vector<GroupElement> elements(std::size_t at_least, std::size_t at_most)
    {
        const auto& ex = inv_.expressions;
        if (ex.size() < at_least || ex.size() > at_most) {
            const std::string want = at_least == at_most ? std::to_string(at_least)
                                                         : std::to_string(at_least) + " or more";
            throw UsageError("expected " + want + " -e expression(s), got " + std::to_string(ex.size()));
        }
        std::vector<GroupElement> out;
        for (const auto& e : ex)
            out.push_back(parse_element(e, group()));
        return out;
    }

    void emit_element(const GroupElement& g)
    {
        if (json())
            out_ << ordered_json(format_element(g)).dump() << '\n';
        else
            out_ << format_element(g) << '\n';
    }

    void emit_word(std::string_view word)
    {
        if (json())
            out_ << ordered_json(std::string(word)).dump() << '\n';
        else
            out_ << word << '\n';
    }

    int mul()
    {
        auto gs = elements(1, SIZE_MAX);
        GroupElement acc = group().identity();
        for (const auto& g : gs)
            acc = group().multiply(acc, g);
        emit_element(acc);
        return ok;
    }

    int inv()
    {
        emit_element(group().invert(elements(1, 1)[0]));
        return ok;
    }

    int conj()
    {
        auto gs = elements(2, 2);
        emit_element(group().conjugate(gs[0], gs[1]));
        return ok;
    }

    int sign()
    {
        const OrderOracle o = oracle();
        auto gs = elements(1, SIZE_MAX);
        ordered_json arr = ordered_json::array();
        for (std::size_t k = 0; k < gs.size(); ++k) {
            const Sign s = o.sign_of(gs[k]);
            if (json())
                arr.push_back({{"element", format_element(gs[k])}, {"sign", to_int(s)}});
            else
                out_ << to_string(s) << '\n';
        }
        if (json())
            out_ << arr.dump() << '\n';
        return ok;
    }

    int cmp()
    {
        const OrderOracle o = oracle();
        auto gs = elements(2, 2);
        emit_word(to_string(o.compare(gs[0], gs[1])));
        return ok;
    }

    int arch()
    {
        const OrderOracle o = oracle();
        emit_word(o.arch_class(elements(1, 1)[0]).to_string());
        return ok;
    }

    int arch_cmp()
    {
        const OrderOracle o = oracle();
        auto gs = elements(2, 2);
        emit_word(to_string(o.arch_compare(gs[0], gs[1])));
        return ok;
    }

    int validate_cmd()
    {
        const auto v = validate(descriptor());
        if (json()) {
            ordered_json r;
            r["valid"] = !v;
            if (v) {
                r["clause"] = v->clause;
                r["detail"] = v->detail;
            }
            out_ << r.dump() << '\n';
        } else if (v) {
            out_ << "invalid: " << v->clause << ": " << v->detail << '\n';
        } else {
            out_ << "ok\n";
        }
        return v ? domain_error : ok;
    }

    int enumerate_cmd()
    {
        const int n = arity();
        if (n < 2)
            throw Error(ErrorCode::arity_out_of_range, "n must be at least 2");
        const std::int64_t B = inv_.config.offset_bound;
        if (inv_.count_only) {
            const auto count = enumeration_count(n, B);
            if (json())
                out_ << ordered_json{{"n", n}, {"B", B}, {"count", count}}.dump() << '\n';
            else
                out_ << count << '\n';
            return ok;
        }
        DescriptorEnumerator cursor(n, B);
        if (json())
            out_ << "[\n";
        bool first = true;
        while (auto d = cursor.next()) {
            if (json() && !first)
                out_ << ",\n";
            out_ << descriptor_to_json(*d);
            if (!json())
                out_ << '\n';
            first = false;
        }
        if (json())
            out_ << "\n]\n";
        return ok;
    }

    int reference()
    {
        out_ << descriptor_to_json(reference_descriptor(arity()), 2) << '\n';
        return ok;
    }

    void emit_certificate(const Certificate& c)
    {
        if (json()) {
            out_ << certificate_to_json(c, 2) << '\n';
            return;
        }
        for (const auto& e : c)
            out_ << std::setw(2) << to_string(e.sign) << "  " << format_element(e.element) << '\n';
    }

    int certificate()
    {
        emit_certificate(isolation_certificate(group(), descriptor()));
        return ok;
    }

    int witness()
    {
        const OrderDescriptor& d = descriptor();
        Certificate c;
        if (!inv_.certificate_path.empty()) {
            if (!inv_.expressions.empty())
                throw UsageError("give either --cert or -e, not both");
            c = certificate_from_json(read_file(inv_.certificate_path), group());
        } else {
            const OrderOracle o = oracle();
            for (const auto& g : elements(0, SIZE_MAX)) {
                if (g.is_identity())
                    throw Error(ErrorCode::invalid_argument, "the identity has no sign to certify");
                c.push_back({g, o.sign_of(g)});
            }
            check_certificate(c);
        }
        const auto ws = limit_witness(group(), d, c, inv_.witness_count);
        if (json())
            out_ << "[\n";
        for (std::size_t k = 0; k < ws.size(); ++k) {
            out_ << descriptor_to_json(ws[k]);
            out_ << (json() && k + 1 < ws.size() ? ",\n" : "\n");
        }
        if (json())
            out_ << "]\n";
        return ok;
    }

    int ok_test()
    {
        const bool member = in_Ok(descriptor(), inv_.k);
        if (json())
            out_ << ordered_json(member).dump() << '\n';
        else
            out_ << (member ? "true" : "false") << '\n';
        return ok;
    }

    int cb_model_cmd()
    {
        const RankReport r = cb_model(arity());
        if (json()) {
            out_ << rank_report_to_json(r, inv_.shapes, 2) << '\n';
            return ok;
        }
        out_ << "n " << r.n << "\nspaceRank " << r.space_rank << "\nshapes " << r.shape_count << '\n';
        for (const auto& [p, rank] : r.partition_ranks) {
            out_ << "rank " << rank << "  ";
            for (const auto& block : p) {
                out_ << '{';
                for (std::size_t k = 0; k < block.size(); ++k)
                    out_ << (k ? "," : "") << block[k];
                out_ << '}';
            }
            out_ << '\n';
        }
        if (inv_.shapes) {
            for (const auto& s : enumerate_shapes(r.n)) {
                out_ << "shape " << bits_to_string(s.gamma) << ' ';
                for (std::size_t b = 0; b < s.blocks.size(); ++b) {
                    out_ << '[';
                    for (std::size_t k = 0; k < s.blocks[b].size(); ++k)
                        out_ << (k ? "," : "") << s.blocks[b][k];
                    out_ << ']';
                }
                out_ << ' ' << bits_to_string(s.directions) << " rank " << r.shape_rank(s) << '\n';
            }
        }
        return ok;
    }

    int verify()
    {
        VerifyConfig vc;
        vc.n = arity();
        vc.offset_bound = inv_.config.offset_bound;
        vc.samples = inv_.config.samples;
        vc.seed = inv_.config.seed;
        vc.primes = inv_.config.primes;
        vc.sign.precision_ceiling = inv_.config.precision_ceiling;
        const auto results = run_verify(vc);
        const bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });
        if (json()) {
            ordered_json arr = ordered_json::array();
            for (const auto& r : results) {
                ordered_json item;
                item["name"] = r.name;
                item["passed"] = r.passed();
                item["skipped"] = r.skipped;
                item["cases"] = r.cases;
                item["failures"] = r.failures;
                item["seconds"] = r.seconds;
                item["subject"] = r.subject;
                if (!r.passed())
                    item["firstFailure"] = r.first_failure;
                arr.push_back(std::move(item));
            }
            out_ << ordered_json{{"passed", all}, {"checks", arr}}.dump(2) << '\n';
        } else {
            out_ << std::left << std::setw(6) << "status" << std::setw(26) << "check" << std::right << std::setw(9)
                 << "cases" << std::setw(10) << "seconds" << "  subject\n";
            for (const auto& r : results) {
                out_ << std::left << std::setw(6) << (r.skipped ? "SKIP" : r.passed() ? "PASS" : "FAIL") << std::setw(26) << r.name
                     << std::right << std::setw(9) << r.cases << std::setw(10) << std::fixed << std::setprecision(2)
                     << r.seconds << "  " << r.subject << '\n';
                if (!r.passed())
                    out_ << "      " << r.failures << " failure(s); first: " << r.first_failure << '\n';
            }
            out_ << (all ? "all checks passed" : "some checks FAILED") << '\n';
        }
        return all ? ok : property_failure;
    }

private:
    const Invocation& inv_;
    std::ostream& out_;
    std::optional<OrderDescriptor> descriptor_;
    std::optional<Group> group_;
};

void add_common(CLI::App* sub, Invocation& inv)
{
    auto& c = inv.config;
    sub->add_option("-n", c.n, "Arity of G_n")->check(CLI::Range(2, 64));
    sub->add_option("-d", inv.descriptor_path, "Descriptor JSON file");
    sub->add_option("-e", inv.expressions, "Element expression (repeatable)")->allow_extra_args(false);
    sub->add_option("-B", c.offset_bound, "Offset bound")->check(CLI::NonNegativeNumber);
    sub->add_option("--primes", c.primes, "Primes p_1,...,p_n")->delimiter(',');
    sub->add_option("--precision-ceiling", c.precision_ceiling, "Sign engine precision ceiling in bits")
        ->check(CLI::Range(64u, 1u << 24));
    sub->add_option("--samples", c.samples, "Random cases per property group");
    sub->add_option("--seed", c.seed, "Random seed");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app("Exact computation in the ordered groups G_n and their spaces of orders", "ordspace");
    app.require_subcommand(1, 1);
    Invocation inv;

    struct Command {
        const char* name;
        const char* help;
        int (Session::*action)();
    };
    const std::vector<Command> commands{
        {"mul", "Product of the -e elements", &Session::mul},
        {"inv", "Inverse of -e", &Session::inv},
        {"conj", "k^-1 g k for -e g -e k", &Session::conj},
        {"sign", "Sign of each -e element under -d", &Session::sign},
        {"cmp", "Compare -e g -e h under -d", &Session::cmp},
        {"arch", "Archimedean class of -e under -d", &Session::arch},
        {"arch-cmp", "Compare Archimedean classes of -e g -e h under -d", &Session::arch_cmp},
        {"validate", "Check a descriptor file", &Session::validate_cmd},
        {"enumerate", "List every descriptor with offsets in [-B, B]", &Session::enumerate_cmd},
        {"reference", "The lexicographic reference descriptor", &Session::reference},
        {"certificate", "Isolation certificate of a fully mixed -d", &Session::certificate},
        {"witness", "More mixed descriptors agreeing with a certificate", &Session::witness},
        {"ok-test", "Membership of -d in O_k", &Session::ok_test},
        {"cb-model", "Cantor-Bendixson model on mixing shapes", &Session::cb_model_cmd},
        {"verify", "Run the property suite", &Session::verify},
    };

    std::vector<std::pair<CLI::App*, int (Session::*)()>> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        add_common(sub, inv);
        subs.emplace_back(sub, c.action);
    }
    app.get_subcommand("enumerate")->add_flag("--count", inv.count_only, "Print only the number of descriptors");
    app.get_subcommand("witness")->add_option("--count", inv.witness_count, "Number of witnesses");
    app.get_subcommand("witness")->add_option("--cert", inv.certificate_path, "Certificate JSON file");
    app.get_subcommand("ok-test")->add_option("-k", inv.k, "Index k of O_k")->required();
    app.get_subcommand("cb-model")->add_flag("--shapes", inv.shapes, "List every shape with its rank");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    Session session(inv, out);
    try {
        for (const auto& [sub, action] : subs) {
            if (sub->parsed())
                return (session.*action)();
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::syntax_error || e.code() == ErrorCode::format_error ? usage_error : domain_error;
    }
    return usage_error;
}

} // namespace ordspace::cli

#include "ordspace/serialization.hpp"

#include "ordspace/error.hpp"
#include "ordspace/expression.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace ordspace {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw Error(ErrorCode::format_error, what);
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        bad(e.what());
    }
}

const json& field(const json& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        bad(std::string("missing field \"") + key + "\"");
    return *it;
}

std::int64_t as_int(const json& v, const std::string& what)
{
    if (!v.is_number_integer())
        bad(what + " must be an integer");
    return v.get<std::int64_t>();
}

BitString as_bits(const json& v, const std::string& what)
{
    if (!v.is_string())
        bad(what + " must be a 0/1 string");
    try {
        return bits_from_string(v.get<std::string>());
    } catch (const Error&) {
        bad(what + " must be a 0/1 string");
    }
}

} // namespace

std::string descriptor_to_json(const OrderDescriptor& d, int indent)
{
    json mixing = json::object();
    for (std::size_t b = 0; b < d.mixing.size(); ++b) {
        if (d.mixing[b].empty())
            continue;
        json pairs = json::array();
        for (const auto& p : d.mixing[b])
            pairs.push_back({p.index, p.offset});
        mixing[std::to_string(b)] = std::move(pairs);
    }
    // Insertion order is kept so files read in the documented field order.
    nlohmann::ordered_json out;
    out["n"] = d.n;
    out["gamma"] = bits_to_string(d.gamma);
    out["blocks"] = d.blocks;
    out["directions"] = bits_to_string(d.directions);
    out["mixing"] = mixing;
    return out.dump(indent);
}

OrderDescriptor descriptor_from_json(std::string_view text)
{
    const json j = parse_json(text);
    if (!j.is_object())
        bad("descriptor must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key != "n" && key != "gamma" && key != "blocks" && key != "directions" && key != "mixing")
            bad("unknown field \"" + key + "\"");
    }

    OrderDescriptor d;
    d.n = static_cast<int>(as_int(field(j, "n"), "n"));
    d.gamma = as_bits(field(j, "gamma"), "gamma");
    d.directions = as_bits(field(j, "directions"), "directions");

    const json& blocks = field(j, "blocks");
    if (!blocks.is_array())
        bad("blocks must be a list of lists");
    for (const auto& block : blocks) {
        if (!block.is_array())
            bad("blocks must be a list of lists");
        std::vector<int> b;
        for (const auto& i : block)
            b.push_back(static_cast<int>(as_int(i, "block entry")));
        std::sort(b.begin(), b.end());
        d.blocks.push_back(std::move(b));
    }

    d.mixing.assign(d.blocks.size(), {});
    auto mixing_it = j.find("mixing");
    if (mixing_it != j.end()) {
        if (!mixing_it->is_object())
            bad("mixing must be an object keyed by block position");
        for (const auto& [key, pairs] : mixing_it->items()) {
            std::size_t pos = 0;
            std::size_t used = 0;
            try {
                pos = std::stoul(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != key.size() || pos >= d.blocks.size())
                bad("mixing key \"" + key + "\" is not a block position");
            if (!pairs.is_array())
                bad("mixing entries must be lists of [index, offset]");
            for (const auto& pair : pairs) {
                if (!pair.is_array() || pair.size() != 2)
                    bad("mixing entries must be lists of [index, offset]");
                d.mixing[pos].push_back({static_cast<int>(as_int(pair[0], "pair index")), as_int(pair[1], "pair offset")});
            }
        }
    }
    return d;
}

std::string certificate_to_json(const Certificate& c, int indent)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& e : c) {
        nlohmann::ordered_json item;
        item["element"] = format_element(e.element);
        item["sign"] = to_int(e.sign);
        out.push_back(std::move(item));
    }
    return out.dump(indent);
}

Certificate certificate_from_json(std::string_view text, const Group& group)
{
    const json j = parse_json(text);
    if (!j.is_array())
        bad("certificate must be a JSON list");
    Certificate c;
    for (const auto& item : j) {
        if (!item.is_object())
            bad("certificate entries must be objects");
        for (const auto& [key, value] : item.items()) {
            if (key != "element" && key != "sign")
                bad("unknown field \"" + key + "\"");
        }
        const json& expr = field(item, "element");
        if (!expr.is_string())
            bad("element must be an expression string");
        const auto s = as_int(field(item, "sign"), "sign");
        if (s != 1 && s != -1)
            bad("sign must be 1 or -1");
        c.push_back({parse_element(expr.get<std::string>(), group), sign_of_int(s)});
    }
    check_certificate(c);
    return c;
}

std::string rank_report_to_json(const RankReport& r, bool with_shapes, int indent)
{
    nlohmann::ordered_json out;
    out["n"] = r.n;
    out["spaceRank"] = r.space_rank;
    out["shapeCount"] = r.shape_count;
    auto partitions = nlohmann::ordered_json::array();
    for (const auto& [p, rank] : r.partition_ranks)
        partitions.push_back({{"blocks", p}, {"rank", rank}});
    out["partitionRanks"] = std::move(partitions);
    if (with_shapes) {
        auto shapes = nlohmann::ordered_json::array();
        for (const auto& s : enumerate_shapes(r.n)) {
            nlohmann::ordered_json item;
            item["gamma"] = bits_to_string(s.gamma);
            item["blocks"] = s.blocks;
            item["directions"] = bits_to_string(s.directions);
            item["chains"] = s.chains;
            item["rank"] = r.shape_rank(s);
            shapes.push_back(std::move(item));
        }
        out["shapes"] = std::move(shapes);
    }
    return out.dump(indent);
}

} // namespace ordspace

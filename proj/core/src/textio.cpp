#include "orthocompact/textio.hpp"

#include <charconv>
#include <string_view>

#include "json.hpp"

#include "orthocompact/errors.hpp"

namespace orthocompact {

namespace {

std::string_view trimmed(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, const std::string& whole)
{
    s = trimmed(s);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        fail(Errc::BadFormat, "not an integer entry in '" + whole + "'");
    return value;
}

// Splits the bracketed list of `prefix:[e1,...,en]`, handing each raw
// entry to `take`.  Requires at least one entry.
template <class F>
void split_entries(const std::string& text, std::string_view prefix, F take)
{
    std::string_view s = trimmed(text);
    if (s.substr(0, prefix.size()) != prefix)
        fail(Errc::BadFormat, "expected '" + std::string(prefix) + "...]' but got '" + text + "'");
    s.remove_prefix(prefix.size());
    if (s.empty() || s.back() != ']')
        fail(Errc::BadFormat, "missing closing ']' in '" + text + "'");
    s.remove_suffix(1);
    if (trimmed(s).empty())
        fail(Errc::BadFormat, "empty entry list in '" + text + "'");
    while (true) {
        const auto comma = s.find(',');
        take(s.substr(0, comma));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
}

} // namespace

Weight parse_weight(const std::string& text)
{
    Weight w;
    split_entries(text, "w:[", [&](std::string_view entry) {
        w.coeffs.push_back(parse_int(entry, text));
    });
    return w;
}

RootVec parse_rootvec(const std::string& text)
{
    RootVec v;
    split_entries(text, "a:[", [&](std::string_view entry) {
        entry = trimmed(entry);
        const auto slash = entry.find('/');
        if (slash == std::string_view::npos) {
            v.twice.push_back(2 * parse_int(entry, text));
        } else {
            if (trimmed(entry.substr(slash + 1)) != "2")
                fail(Errc::BadFormat, "only halves 'p/2' are allowed in '" + text + "'");
            v.twice.push_back(parse_int(entry.substr(0, slash), text));
        }
    });
    return v;
}

std::string format_weight(const Weight& w)
{
    std::string out = "w:[";
    for (std::size_t i = 0; i < w.coeffs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w.coeffs[i]);
    }
    out += ']';
    return out;
}

std::string format_rootvec(const RootVec& v)
{
    std::string out = "a:[";
    for (std::size_t i = 0; i < v.twice.size(); ++i) {
        if (i) out += ',';
        if (v.twice[i] % 2 == 0)
            out += std::to_string(v.twice[i] / 2);
        else
            out += std::to_string(v.twice[i]) + "/2";
    }
    out += ']';
    return out;
}

IndexSet parse_index_list(const std::string& text)
{
    IndexSet out;
    std::string_view s = trimmed(text);
    if (s.empty()) fail(Errc::BadFormat, "empty index list");
    while (true) {
        const auto comma = s.find(',');
        out.push_back(parse_int(s.substr(0, comma), text));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

std::string subset_to_json_text(const RankedContext& ctx, const SimpleSubset& pi)
{
    nlohmann::ordered_json j;
    j["schema"] = "orthocompact/1";
    j["r"] = ctx.rank();
    auto& weights = j["weights"] = nlohmann::ordered_json::array();
    for (const Weight& w : pi.weights) weights.push_back(w.coeffs);
    j["max"] = pi.max.coeffs;
    return j.dump(2) + "\n";
}

ParsedSubset subset_from_json_text(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::BadFormat, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(Errc::BadFormat, "subset file must be a JSON object");
    if (j.contains("schema")) {
        if (!j["schema"].is_string() || j["schema"].get<std::string>() != "orthocompact/1")
            fail(Errc::BadFormat, "unsupported schema in subset file");
    }
    if (!j.contains("r") || !j["r"].is_number_integer())
        fail(Errc::BadFormat, "subset file needs an integer \"r\"");
    const int r = j["r"].get<int>();
    if (r < 2 || r > 16) fail(Errc::BadFormat, "rank out of range in subset file");
    if (!j.contains("weights") || !j["weights"].is_array() || j["weights"].empty())
        fail(Errc::BadFormat, "subset file needs a non-empty \"weights\" array");

    std::vector<Weight> weights;
    for (const auto& row : j["weights"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != r)
            fail(Errc::BadFormat, "each weight needs exactly r entries");
        Weight w;
        for (const auto& entry : row) {
            if (!entry.is_number_integer())
                fail(Errc::BadFormat, "weight entries must be integers");
            w.coeffs.push_back(entry.get<int>());
        }
        weights.push_back(std::move(w));
    }

    ParsedSubset out;
    out.r = r;
    const RankedContext ctx(r);
    out.pi = make_simple_subset(ctx, weights);

    if (j.contains("max")) {
        const auto& m = j["max"];
        if (!m.is_array() || static_cast<int>(m.size()) != r)
            fail(Errc::BadFormat, "\"max\" needs exactly r entries");
        Weight declared;
        for (const auto& entry : m) {
            if (!entry.is_number_integer())
                fail(Errc::BadFormat, "\"max\" entries must be integers");
            declared.coeffs.push_back(entry.get<int>());
        }
        if (!(declared == out.pi.max))
            fail(Errc::BadFormat, "declared \"max\" is not the dominance-maximal weight");
    }
    return out;
}

} // namespace orthocompact

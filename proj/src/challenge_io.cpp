#include "awm/challenge_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace awm {

using nlohmann::json;

namespace {

json pair_json(const std::optional<ParamPair>& p) {
    if (!p) return nullptr;
    return json{{"name", p->name}, {"value", p->value}};
}

void expect_keys(const json& j, const std::string& where, const std::set<std::string>& keys) {
    if (!j.is_object()) throw SchemaError(where, "expected an object");
    for (const auto& [key, _] : j.items())
        if (!keys.contains(key)) throw SchemaError(where + (where.empty() ? "" : ".") + key, "unknown field");
    for (const std::string& key : keys)
        if (!j.contains(key)) throw SchemaError(where + (where.empty() ? "" : ".") + key, "missing field");
}

std::string join(const std::string& where, const std::string& key) {
    return where.empty() ? key : where + "." + key;
}

std::uint64_t get_u64(const json& j, const std::string& field) {
    if (!j.is_number_integer()) throw SchemaError(field, "expected a non-negative integer");
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw SchemaError(field, "expected a non-negative integer");
    return static_cast<std::uint64_t>(v);
}

std::uint32_t get_u32(const json& j, const std::string& field) {
    const std::uint64_t v = get_u64(j, field);
    if (v > 0xFFFFFFFFULL) throw SchemaError(field, "value too large");
    return static_cast<std::uint32_t>(v);
}

std::optional<ParamPair> get_pair(const json& j, const std::string& field) {
    if (j.is_null()) return std::nullopt;
    expect_keys(j, field, {"name", "value"});
    return ParamPair{get_u32(j["name"], field + ".name"), get_u32(j["value"], field + ".value")};
}

}  // namespace

std::string serialize(const ChallengeGraph& g) {
    json links = json::array();
    for (const Link& l : g.links) {
        links.push_back(json{{"src", l.src},
                             {"dst", l.dst},
                             {"kind", std::string(to_string(l.kind))},
                             {"guard", pair_json(l.guard)},
                             {"hint", pair_json(l.hint)}});
    }
    const json doc{{"format_version", kFormatVersion},
                   {"level", static_cast<int>(g.level)},
                   {"n_files", g.n_files},
                   {"n_param_names", g.n_param_names},
                   {"n_param_values", g.n_param_values},
                   {"links", std::move(links)},
                   {"flag", json{{"file", g.flag.file}, {"guard", pair_json(g.flag.guard)}}},
                   {"seed", g.seed}};
    return doc.dump();
}

ChallengeGraph parse_challenge(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("malformed JSON: ") + e.what());
    }
    expect_keys(doc, "", {"format_version", "level", "n_files", "n_param_names", "n_param_values",
                          "links", "flag", "seed"});
    if (get_u64(doc["format_version"], "format_version") != kFormatVersion)
        throw SchemaError("format_version", "unsupported version");

    ChallengeGraph g;
    const std::uint64_t level = get_u64(doc["level"], "level");
    if (level < 1 || level > 3) throw SchemaError("level", "expected 1, 2 or 3");
    g.level = static_cast<Level>(level);
    g.n_files = get_u32(doc["n_files"], "n_files");
    g.n_param_names = get_u32(doc["n_param_names"], "n_param_names");
    g.n_param_values = get_u32(doc["n_param_values"], "n_param_values");
    g.seed = get_u64(doc["seed"], "seed");

    const json& links = doc["links"];
    if (!links.is_array()) throw SchemaError("links", "expected an array");
    for (std::size_t i = 0; i < links.size(); ++i) {
        const std::string where = "links[" + std::to_string(i) + "]";
        const json& lj = links[i];
        expect_keys(lj, where, {"src", "dst", "kind", "guard", "hint"});
        Link l;
        l.src = get_u32(lj["src"], join(where, "src"));
        l.dst = get_u32(lj["dst"], join(where, "dst"));
        const json& kind = lj["kind"];
        if (kind == "explicit") {
            l.kind = LinkKind::Explicit;
        } else if (kind == "implicit") {
            l.kind = LinkKind::Implicit;
        } else {
            throw SchemaError(join(where, "kind"), "expected \"explicit\" or \"implicit\", got " + kind.dump());
        }
        l.guard = get_pair(lj["guard"], join(where, "guard"));
        l.hint = get_pair(lj["hint"], join(where, "hint"));
        g.links.push_back(l);
    }

    const json& flag = doc["flag"];
    expect_keys(flag, "flag", {"file", "guard"});
    g.flag.file = get_u32(flag["file"], "flag.file");
    g.flag.guard = get_pair(flag["guard"], "flag.guard");
    return g;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error("write failed: " + path.string());
}

ChallengeGraph regenerate_from_file(const std::filesystem::path& path) {
    ChallengeGraph g = parse_challenge(read_text_file(path));
    ValidationReport report = validate(g);
    if (!report.ok()) throw InvalidChallenge(std::move(report));
    return g;
}

void write_challenge(const std::filesystem::path& path, const ChallengeGraph& challenge) {
    write_text_file(path, serialize(challenge) + "\n");
}

}  // namespace awm

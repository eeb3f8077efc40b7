#include "awm/episode_log.hpp"

#include <set>

#include <json.hpp>

#include "awm/challenge_io.hpp"
#include "awm/errors.hpp"

namespace awm {

using nlohmann::json;

namespace {

json revealed_json(const std::vector<Revealed>& revealed) {
    json arr = json::array();
    for (const Revealed& r : revealed) {
        json hint = nullptr;
        if (r.hint) hint = json{{"name", r.hint->name}, {"value", r.hint->value}};
        arr.push_back(json{{"file", r.file}, {"hint", std::move(hint)}});
    }
    return arr;
}

std::uint32_t u32_field(const json& j, const std::string& field) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() > 0xFFFFFFFFULL)
        throw SchemaError(field, "expected a non-negative 32-bit integer");
    return j.get<std::uint32_t>();
}

void check_keys(const json& j, const std::string& where, const std::set<std::string>& keys) {
    if (!j.is_object()) throw SchemaError(where, "expected an object");
    if (j.size() != keys.size()) throw SchemaError(where, "unexpected set of fields");
    for (const std::string& k : keys)
        if (!j.contains(k)) throw SchemaError(where + "." + k, "missing field");
}

std::string describe(const EpisodeRecord& r) { return to_log_line(r); }

}  // namespace

EpisodeRecord make_record(const StepResult& result) {
    return EpisodeRecord{result.info.step, result.info.action_index, result.observation.kind,
                         result.observation.revealed, result.reward, result.done};
}

std::string to_log_line(const EpisodeRecord& r) {
    json j{{"step", r.step},
           {"action_index", r.action_index ? json(*r.action_index) : json(nullptr)},
           {"observation_kind", std::string(to_string(r.observation_kind))},
           {"revealed", revealed_json(r.revealed)},
           {"reward", r.reward},
           {"done", r.done}};
    return j.dump();
}

EpisodeRecord parse_log_line(std::string_view line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("malformed JSON: ") + e.what());
    }
    check_keys(j, "record", {"step", "action_index", "observation_kind", "revealed", "reward", "done"});
    EpisodeRecord r;
    if (!j["step"].is_number_unsigned()) throw SchemaError("step", "expected a non-negative integer");
    r.step = j["step"].get<std::uint64_t>();
    if (!j["action_index"].is_null()) {
        if (!j["action_index"].is_number_unsigned())
            throw SchemaError("action_index", "expected a non-negative integer or null");
        r.action_index = j["action_index"].get<std::uint64_t>();
    }
    if (!j["observation_kind"].is_string()) throw SchemaError("observation_kind", "expected a string");
    try {
        r.observation_kind = observation_kind_from_string(j["observation_kind"].get<std::string>());
    } catch (const Error& e) {
        throw SchemaError("observation_kind", e.what());
    }
    if (!j["revealed"].is_array()) throw SchemaError("revealed", "expected an array");
    for (std::size_t i = 0; i < j["revealed"].size(); ++i) {
        const std::string where = "revealed[" + std::to_string(i) + "]";
        const json& e = j["revealed"][i];
        check_keys(e, where, {"file", "hint"});
        Revealed rv{u32_field(e["file"], where + ".file"), std::nullopt};
        if (!e["hint"].is_null()) {
            check_keys(e["hint"], where + ".hint", {"name", "value"});
            rv.hint = ParamPair{u32_field(e["hint"]["name"], where + ".hint.name"),
                                u32_field(e["hint"]["value"], where + ".hint.value")};
        }
        r.revealed.push_back(rv);
    }
    if (!j["reward"].is_number()) throw SchemaError("reward", "expected a number");
    r.reward = j["reward"].get<double>();
    if (!j["done"].is_boolean()) throw SchemaError("done", "expected a boolean");
    r.done = j["done"].get<bool>();
    return r;
}

std::vector<EpisodeRecord> parse_episode_log(std::string_view text) {
    std::vector<EpisodeRecord> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        try {
            out.push_back(parse_log_line(line));
        } catch (const SchemaError& e) {
            throw SchemaError("line " + std::to_string(line_no) + ": " + e.field(), e.what());
        }
    }
    return out;
}

std::vector<EpisodeRecord> read_episode_log(const std::filesystem::path& path) {
    return parse_episode_log(read_text_file(path));
}

std::string format_episode_log(const std::vector<EpisodeRecord>& records) {
    std::string out;
    for (const EpisodeRecord& r : records) out += to_log_line(r) + "\n";
    return out;
}

ReplayReport replay(const EpisodeConfig& config, const std::vector<EpisodeRecord>& records) {
    ReplayReport report;
    Env env(config);
    env.reset();
    for (std::size_t i = 0; i < records.size(); ++i) {
        const EpisodeRecord& expected = records[i];
        auto fail = [&](std::string why) {
            report.ok = false;
            report.first_mismatch = i;
            report.message = "record " + std::to_string(i) + ": " + why;
            return report;
        };
        if (!expected.action_index) return fail("no action index to replay");
        if (env.done()) return fail("episode already finished");
        if (*expected.action_index >= env.action_space().size()) return fail("action index out of range");
        const EpisodeRecord actual = make_record(env.step(*expected.action_index));
        report.checked = i + 1;
        if (actual != expected) return fail("expected " + describe(expected) + " got " + describe(actual));
    }
    return report;
}

std::vector<EpisodeRecord> record_episode(const EpisodeConfig& config, const std::vector<ActionIndex>& actions) {
    std::vector<EpisodeRecord> out;
    Env env(config);
    env.reset();
    for (ActionIndex a : actions) {
        if (env.done()) break;
        out.push_back(make_record(env.step(a)));
    }
    return out;
}

}  // namespace awm

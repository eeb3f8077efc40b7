#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "awm/env.hpp"

namespace awm {

// One line of an episode log (newline-delimited JSON):
// {"action_index":i|null,"done":b,"observation_kind":"...","revealed":[{"file":f,"hint":null|{"name":n,"value":v}}],"reward":r,"step":s}
struct EpisodeRecord {
    std::uint64_t step = 0;
    std::optional<ActionIndex> action_index;
    ObservationKind observation_kind = ObservationKind::Nothing;
    std::vector<Revealed> revealed;
    double reward = 0.0;
    bool done = false;

    friend bool operator==(const EpisodeRecord&, const EpisodeRecord&) = default;
};

EpisodeRecord make_record(const StepResult& result);

std::string to_log_line(const EpisodeRecord& record);

// Throws SchemaError.
EpisodeRecord parse_log_line(std::string_view line);

// Skips blank lines. Throws SchemaError with the line number in the field.
std::vector<EpisodeRecord> parse_episode_log(std::string_view text);
std::vector<EpisodeRecord> read_episode_log(const std::filesystem::path& path);
std::string format_episode_log(const std::vector<EpisodeRecord>& records);

struct ReplayReport {
    bool ok = true;
    std::size_t checked = 0;
    std::optional<std::size_t> first_mismatch;  // 0-based record index
    std::string message;
};

// Re-runs the recorded action indices on a fresh Env and compares every
// record field. Records without an action index cannot be replayed and
// count as a mismatch.
ReplayReport replay(const EpisodeConfig& config, const std::vector<EpisodeRecord>& records);

// Plays `actions` on a fresh Env and logs every step (stops early at done).
std::vector<EpisodeRecord> record_episode(const EpisodeConfig& config, const std::vector<ActionIndex>& actions);

}  // namespace awm

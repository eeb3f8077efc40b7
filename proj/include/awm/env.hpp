#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "awm/action.hpp"
#include "awm/challenge.hpp"
#include "awm/dynamics.hpp"
#include "awm/knowledge.hpp"

namespace awm {

// Default step budget as a multiple of the action count.
inline constexpr std::uint64_t kDefaultStepBudgetFactor = 20;

struct EpisodeConfig {
    std::shared_ptr<const ChallengeGraph> challenge;
    std::uint64_t max_steps = 0;  // 0 selects kDefaultStepBudgetFactor * action_count
    double step_reward = 0.0;
    double flag_reward = 1.0;
};

EpisodeConfig make_episode_config(ChallengeGraph challenge, std::uint64_t max_steps = 0,
                                  double step_reward = 0.0, double flag_reward = 1.0);

// Checks the config (and the challenge) and fills in the default budget.
// Throws InvalidConfig or InvalidChallenge.
EpisodeConfig resolve(EpisodeConfig config);

struct StepInfo {
    std::uint64_t step = 0;                  // 1-based step counter after this action
    std::optional<ActionIndex> action_index;  // absent for out-of-range L3 parameters
    bool truncated = false;                   // budget ran out without the flag
};

struct StepResult {
    Observation observation;
    double reward = 0.0;
    bool done = false;
    StepInfo info;
};

// One episode runner over a shared immutable challenge. Single caller at a
// time; use one Env per thread.
class Env {
public:
    explicit Env(EpisodeConfig config, std::uint64_t seed = 0);

    // Starts a fresh episode: only the entry file is known.
    Observation reset(std::uint64_t seed = 0);

    // Invalid (undiscovered file) actions are soft no-ops: Invalid
    // observation, step_reward, not recorded as tried. Throws
    // ContractViolation (state unchanged) on a finished episode or on a verb
    // or parameter the level does not have.
    StepResult step(const Action& action);
    StepResult step(ActionIndex index);

    const EpisodeConfig& config() const noexcept { return config_; }
    const ChallengeGraph& challenge() const noexcept { return *config_.challenge; }
    const ActionSpace& action_space() const noexcept { return space_; }
    const KnowledgeState& knowledge() const noexcept { return knowledge_; }
    std::uint64_t steps() const noexcept { return steps_; }
    std::uint64_t seed() const noexcept { return seed_; }
    bool done() const noexcept { return done_; }

private:
    StepResult finish_step(Observation obs, std::optional<ActionIndex> index, bool flag);

    EpisodeConfig config_;
    ActionSpace space_;
    KnowledgeState knowledge_;
    std::uint64_t steps_ = 0;
    std::uint64_t seed_ = 0;
    bool done_ = false;
};

std::pair<Env, Observation> reset(EpisodeConfig config, std::uint64_t seed = 0);

// Flat integer encoding of an observation for generic agent toolkits:
// [kind code, revealed-file bitmask in 32-bit chunks (ceil(N/32) entries),
// number of revealed hints]. Kind codes follow ObservationKind order.
std::vector<std::int64_t> encode_observation(const Observation& obs, std::uint32_t n_files);
std::size_t encoded_observation_size(std::uint32_t n_files);

}  // namespace awm

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "awm/env.hpp"
#include "awm/generator.hpp"
#include "awm/knowledge.hpp"
#include "awm/rng.hpp"

namespace awm {

// Data-parallel kernels. Every kernel has an OpenMP version and a serial
// reference with identical results: work item i only ever uses the
// sub-stream derive_seed(seed, i), so the schedule cannot change outputs.

// One challenge per seed, `base` supplying every other field. Output order
// follows `seeds`.
std::vector<ChallengeGraph> generate_batch(const GeneratorConfig& base, std::span<const std::uint64_t> seeds);
std::vector<ChallengeGraph> generate_batch_serial(const GeneratorConfig& base, std::span<const std::uint64_t> seeds);

struct EpisodeSummary {
    std::uint64_t steps = 0;
    double total_reward = 0.0;
    bool solved = false;

    friend bool operator==(const EpisodeSummary&, const EpisodeSummary&) = default;
};

// Chooses the next action index from the agent's knowledge. Must be safe to
// call concurrently from several threads (each call gets its own rng).
using ActionChooser = std::function<ActionIndex(const KnowledgeState&, SplitMix64&)>;

ActionChooser uniform_random_chooser(std::uint64_t action_count);

// Runs `episodes` independent episodes; episode i resets with and draws from
// derive_seed(seed, i).
std::vector<EpisodeSummary> rollout_batch(const EpisodeConfig& config, const ActionChooser& chooser,
                                          std::uint64_t episodes, std::uint64_t seed);
std::vector<EpisodeSummary> rollout_batch_serial(const EpisodeConfig& config, const ActionChooser& chooser,
                                                 std::uint64_t episodes, std::uint64_t seed);

EpisodeSummary run_episode(Env& env, const ActionChooser& chooser, std::uint64_t episode_seed);

int max_threads();

}  // namespace awm

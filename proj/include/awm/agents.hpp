#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "awm/batch.hpp"
#include "awm/env.hpp"
#include "awm/generator.hpp"
#include "awm/knowledge.hpp"

namespace awm {

struct Hyperparams {
    double alpha = 0.1;
    double gamma = 0.95;
    double epsilon_start = 1.0;
    double epsilon_end = 0.05;
    double anneal_fraction = 0.8;  // epsilon reaches epsilon_end after this share of episodes
    std::uint64_t max_action_count = 10'000;
};

// Throws InvalidConfig.
void check(const Hyperparams& hp);

// Linear annealing from epsilon_start to epsilon_end over the first
// anneal_fraction * total episodes, constant afterwards.
double epsilon_at(const Hyperparams& hp, std::uint64_t episode, std::uint64_t total);

// Sparse Q-function: one dense row of action values per visited state.
class QTable {
public:
    explicit QTable(std::uint64_t action_count) : action_count_(action_count) {}

    std::uint64_t action_count() const noexcept { return action_count_; }
    std::size_t size() const noexcept { return rows_.size(); }

    // Creates a zero row on first access.
    std::vector<double>& row(const StateKey& key);
    // nullptr if the state was never visited.
    const std::vector<double>* find(const StateKey& key) const;

    double max_value(const StateKey& key) const;
    double max_abs() const;

    const std::unordered_map<StateKey, std::vector<double>, StateKeyHash>& rows() const noexcept { return rows_; }

private:
    std::uint64_t action_count_;
    std::unordered_map<StateKey, std::vector<double>, StateKeyHash> rows_;
};

// First index holding the maximum value.
ActionIndex greedy_action(std::span<const double> values);

// Deterministic state -> action map; unseen states take default_action.
struct Policy {
    std::uint64_t action_count = 0;
    std::uint64_t state_bits = 0;  // action_count + n_files
    ActionIndex default_action = 0;
    std::unordered_map<StateKey, ActionIndex, StateKeyHash> table;

    ActionIndex act(const KnowledgeState& state) const;
    ActionChooser chooser() const;
};

Policy greedy_policy(const QTable& q, std::uint64_t state_bits);

// Records the state before each action while replaying `actions`.
Policy policy_from_actions(const EpisodeConfig& config, const std::vector<ActionIndex>& actions);

// {"action_count":K,"default_action":d,"format_version":1,"policy":{"<joint state code>":i,...},"state_bits":B}
std::string policy_to_json(const Policy& policy);
Policy policy_from_json(std::string_view text);  // throws SchemaError

struct CurveRow {
    std::uint64_t episode = 0;  // 1-based
    std::uint64_t steps = 0;
    double reward = 0.0;

    friend bool operator==(const CurveRow&, const CurveRow&) = default;
};

std::string curve_csv(const std::vector<CurveRow>& curve);

struct TrainResult {
    Policy policy;
    QTable q{0};
    std::vector<CurveRow> curve;
};

// Epsilon-greedy tabular Q-learning over joint (tried, discovered) states.
// Deterministic in (config, hp, seed, episodes). Ties in the greedy choice go
// to the lowest action index. Throws InvalidConfig when the action count
// exceeds hp.max_action_count or episodes == 0.
TrainResult train(const EpisodeConfig& config, const Hyperparams& hp, std::uint64_t seed, std::uint64_t episodes);

// Independent training runs, one per config, in parallel (and the serial
// reference). Run i uses derive_seed(seed, i).
std::vector<TrainResult> train_many(std::span<const EpisodeConfig> configs, const Hyperparams& hp,
                                    std::uint64_t seed, std::uint64_t episodes);
std::vector<TrainResult> train_many_serial(std::span<const EpisodeConfig> configs, const Hyperparams& hp,
                                           std::uint64_t seed, std::uint64_t episodes);

struct EvalStats {
    std::uint64_t episodes = 0;
    double solve_rate = 0.0;
    double mean_steps = 0.0;
    double mean_reward = 0.0;
};

EvalStats summarize(std::span<const EpisodeSummary> episodes);

// Greedy rollouts of `policy`. Throws ContractViolation when the policy was
// built for a different action space.
EvalStats evaluate(const Policy& policy, const EpisodeConfig& config, std::uint64_t episodes,
                   std::uint64_t seed = 0);

EvalStats evaluate_random(const EpisodeConfig& config, std::uint64_t episodes, std::uint64_t seed);

std::string to_json(const EvalStats& stats);

}  // namespace awm

#include "awm/env.hpp"

#include "awm/challenge_io.hpp"
#include "awm/errors.hpp"

namespace awm {

EpisodeConfig make_episode_config(ChallengeGraph challenge, std::uint64_t max_steps, double step_reward,
                                  double flag_reward) {
    return EpisodeConfig{std::make_shared<const ChallengeGraph>(std::move(challenge)), max_steps, step_reward,
                         flag_reward};
}

EpisodeConfig resolve(EpisodeConfig config) {
    if (!config.challenge) throw InvalidConfig("episode config has no challenge");
    ValidationReport report = validate(*config.challenge);
    if (!report.ok()) throw InvalidChallenge(std::move(report));
    if (!(config.flag_reward > config.step_reward))
        throw InvalidConfig("flag_reward must exceed step_reward");
    if (config.max_steps == 0)
        config.max_steps = kDefaultStepBudgetFactor * ActionSpace(*config.challenge).size();
    return config;
}

Env::Env(EpisodeConfig config, std::uint64_t seed)
    : config_(resolve(std::move(config))),
      space_(*config_.challenge),
      knowledge_(space_),
      seed_(seed) {}

Observation Env::reset(std::uint64_t seed) {
    knowledge_ = KnowledgeState(space_);
    steps_ = 0;
    seed_ = seed;
    done_ = false;
    return Observation{ObservationKind::Revealed, {Revealed{kEntryFile, std::nullopt}}};
}

StepResult Env::step(ActionIndex index) {
    if (done_) throw ContractViolation("step called on a finished episode");
    return step(space_.action(index));
}

StepResult Env::step(const Action& action) {
    if (done_) throw ContractViolation("step called on a finished episode");
    const ChallengeGraph& c = *config_.challenge;
    if (action.file >= c.n_files) throw ContractViolation("action file out of range");
    if (action.verb == Verb::Deepread && c.level == Level::L1)
        throw ContractViolation("deepread is not available at L1");
    if (action.param && c.level != Level::L3)
        throw ContractViolation("parameters are only available at L3");

    if (!space_.allows(action)) return finish_step({ObservationKind::Invalid, {}}, std::nullopt, false);

    const ActionIndex index = space_.index(action);
    if (!knowledge_.discovered(action.file)) return finish_step({ObservationKind::Invalid, {}}, index, false);

    TransitionOutcome outcome = transition(c, action);
    knowledge_.mark_tried(index);
    for (const Revealed& r : outcome.observation.revealed) {
        knowledge_.discover(r.file);
        if (r.hint) knowledge_.learn(*r.hint);
    }
    return finish_step(std::move(outcome.observation), index, outcome.flag_taken);
}

StepResult Env::finish_step(Observation obs, std::optional<ActionIndex> index, bool flag) {
    ++steps_;
    StepResult r;
    r.observation = std::move(obs);
    r.reward = flag ? config_.flag_reward : config_.step_reward;
    r.info.step = steps_;
    r.info.action_index = index;
    r.info.truncated = !flag && steps_ >= config_.max_steps;
    r.done = flag || r.info.truncated;
    done_ = r.done;
    return r;
}

std::pair<Env, Observation> reset(EpisodeConfig config, std::uint64_t seed) {
    Env env(std::move(config), seed);
    Observation obs = env.reset(seed);
    return {std::move(env), std::move(obs)};
}

std::size_t encoded_observation_size(std::uint32_t n_files) { return 2 + (std::size_t{n_files} + 31) / 32; }

std::vector<std::int64_t> encode_observation(const Observation& obs, std::uint32_t n_files) {
    std::vector<std::int64_t> out(encoded_observation_size(n_files), 0);
    out[0] = static_cast<std::int64_t>(obs.kind);
    std::int64_t hints = 0;
    for (const Revealed& r : obs.revealed) {
        if (r.file >= n_files) throw ContractViolation("encode_observation: file out of range");
        out[1 + r.file / 32] |= std::int64_t{1} << (r.file % 32);
        if (r.hint) ++hints;
    }
    out.back() = hints;
    return out;
}

}  // namespace awm

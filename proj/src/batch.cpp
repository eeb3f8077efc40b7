#include "awm/batch.hpp"

#include <exception>

#include <omp.h>

namespace awm {

namespace {

GeneratorConfig with_seed(GeneratorConfig c, std::uint64_t seed) {
    c.seed = seed;
    return c;
}

// Runs body(i) for i in [0, n) across threads and rethrows the first
// exception (by lowest index) on the calling thread.
template <class Body>
void parallel_for(std::int64_t n, Body&& body) {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

std::vector<ChallengeGraph> generate_batch(const GeneratorConfig& base, std::span<const std::uint64_t> seeds) {
    std::vector<ChallengeGraph> out(seeds.size());
    parallel_for(static_cast<std::int64_t>(seeds.size()), [&](std::int64_t i) {
        out[static_cast<std::size_t>(i)] = generate(with_seed(base, seeds[static_cast<std::size_t>(i)]));
    });
    return out;
}

std::vector<ChallengeGraph> generate_batch_serial(const GeneratorConfig& base, std::span<const std::uint64_t> seeds) {
    std::vector<ChallengeGraph> out;
    out.reserve(seeds.size());
    for (std::uint64_t s : seeds) out.push_back(generate(with_seed(base, s)));
    return out;
}

ActionChooser uniform_random_chooser(std::uint64_t action_count) {
    return [action_count](const KnowledgeState&, SplitMix64& rng) { return rng.below(action_count); };
}

EpisodeSummary run_episode(Env& env, const ActionChooser& chooser, std::uint64_t episode_seed) {
    SplitMix64 rng(episode_seed);
    env.reset(episode_seed);
    EpisodeSummary s;
    while (!env.done()) {
        const StepResult r = env.step(chooser(env.knowledge(), rng));
        s.total_reward += r.reward;
        s.solved = s.solved || r.observation.kind == ObservationKind::FlagFound;
    }
    s.steps = env.steps();
    return s;
}

std::vector<EpisodeSummary> rollout_batch(const EpisodeConfig& config, const ActionChooser& chooser,
                                          std::uint64_t episodes, std::uint64_t seed) {
    const EpisodeConfig resolved = resolve(config);
    std::vector<EpisodeSummary> out(episodes);
    std::vector<std::exception_ptr> errors(episodes);
#pragma omp parallel
    {
        // One Env per thread; resolve() already validated everything its
        // constructor checks.
        Env env(resolved);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(episodes); ++i) {
            const auto k = static_cast<std::size_t>(i);
            try {
                out[k] = run_episode(env, chooser, derive_seed(seed, k));
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<EpisodeSummary> rollout_batch_serial(const EpisodeConfig& config, const ActionChooser& chooser,
                                                 std::uint64_t episodes, std::uint64_t seed) {
    Env env(config);
    std::vector<EpisodeSummary> out;
    out.reserve(episodes);
    for (std::uint64_t i = 0; i < episodes; ++i) out.push_back(run_episode(env, chooser, derive_seed(seed, i)));
    return out;
}

}  // namespace awm

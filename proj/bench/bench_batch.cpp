// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to
// compare thread counts.

#include <numeric>
#include <vector>

#include <benchmark/benchmark.h>

#include "awm/agents.hpp"
#include "awm/batch.hpp"
#include "awm/generator.hpp"

namespace {

awm::GeneratorConfig l3_config() {
    awm::GeneratorConfig c;
    c.level = awm::Level::L3;
    c.n = 8;
    c.m = 3;
    c.o = 3;
    return c;
}

std::vector<std::uint64_t> seeds(std::size_t n) {
    std::vector<std::uint64_t> s(n);
    std::iota(s.begin(), s.end(), 1000);
    return s;
}

void BM_GenerateSerial(benchmark::State& state) {
    const auto s = seeds(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(awm::generate_batch_serial(l3_config(), s));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GenerateParallel(benchmark::State& state) {
    const auto s = seeds(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(awm::generate_batch(l3_config(), s));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

awm::EpisodeConfig rollout_config() {
    awm::GeneratorConfig c = l3_config();
    c.seed = 7;
    return awm::resolve(awm::make_episode_config(awm::generate(c)));
}

void BM_RolloutSerial(benchmark::State& state) {
    const auto cfg = rollout_config();
    const auto chooser = awm::uniform_random_chooser(awm::ActionSpace(*cfg.challenge).size());
    for (auto _ : state)
        benchmark::DoNotOptimize(awm::rollout_batch_serial(cfg, chooser, static_cast<std::uint64_t>(state.range(0)), 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RolloutParallel(benchmark::State& state) {
    const auto cfg = rollout_config();
    const auto chooser = awm::uniform_random_chooser(awm::ActionSpace(*cfg.challenge).size());
    for (auto _ : state)
        benchmark::DoNotOptimize(awm::rollout_batch(cfg, chooser, static_cast<std::uint64_t>(state.range(0)), 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<awm::EpisodeConfig> training_configs() {
    std::vector<awm::EpisodeConfig> out;
    for (std::uint64_t s = 0; s < 8; ++s) {
        awm::GeneratorConfig c;
        c.level = awm::Level::L1;
        c.n = 5;
        c.seed = s;
        out.push_back(awm::make_episode_config(awm::generate(c)));
    }
    return out;
}

void BM_TrainSerial(benchmark::State& state) {
    const auto cfgs = training_configs();
    for (auto _ : state) benchmark::DoNotOptimize(awm::train_many_serial(cfgs, {}, 1, 500));
}

void BM_TrainParallel(benchmark::State& state) {
    const auto cfgs = training_configs();
    for (auto _ : state) benchmark::DoNotOptimize(awm::train_many(cfgs, {}, 1, 500));
}

}  // namespace

BENCHMARK(BM_GenerateSerial)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateParallel)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RolloutSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RolloutParallel)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrainSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrainParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

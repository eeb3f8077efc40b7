#include <doctest.h>

#include <numeric>

#include "awm/agents.hpp"
#include "awm/batch.hpp"
#include "awm/challenge_io.hpp"
#include "awm/generator.hpp"

using namespace awm;

TEST_CASE("parallel generation matches serial") {
    GeneratorConfig c;
    c.level = Level::L3;
    c.n = 6;
    c.m = 2;
    c.o = 3;
    std::vector<std::uint64_t> seeds(64);
    std::iota(seeds.begin(), seeds.end(), 500);
    const auto a = generate_batch(c, seeds);
    const auto b = generate_batch_serial(c, seeds);
    REQUIRE(a.size() == seeds.size());
    CHECK(a == b);
    c.seed = seeds[10];
    CHECK(serialize(a[10]) == serialize(generate(c)));
}

TEST_CASE("parallel rollouts match serial") {
    GeneratorConfig c;
    c.level = Level::L2;
    c.n = 6;
    c.seed = 12;
    const auto cfg = resolve(make_episode_config(generate(c)));
    const auto chooser = uniform_random_chooser(ActionSpace(*cfg.challenge).size());
    const auto a = rollout_batch(cfg, chooser, 500, 9);
    CHECK(a == rollout_batch_serial(cfg, chooser, 500, 9));
    CHECK(a != rollout_batch_serial(cfg, chooser, 500, 10));
}

TEST_CASE("parallel training matches serial") {
    std::vector<EpisodeConfig> cfgs;
    for (std::uint64_t s = 0; s < 4; ++s) {
        GeneratorConfig c;
        c.n = 4;
        c.seed = s;
        cfgs.push_back(make_episode_config(generate(c)));
    }
    const auto a = train_many(cfgs, {}, 3, 100);
    const auto b = train_many_serial(cfgs, {}, 3, 100);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].curve == b[i].curve);
        CHECK(policy_to_json(a[i].policy) == policy_to_json(b[i].policy));
    }
}

TEST_CASE("errors inside a parallel batch surface") {
    GeneratorConfig c;
    c.n = 1;
    const std::vector<std::uint64_t> seeds{1, 2};
    CHECK_THROWS(generate_batch(c, seeds));
}

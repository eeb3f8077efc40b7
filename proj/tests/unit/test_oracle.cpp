#include <doctest.h>

#include "awm/env.hpp"
#include "awm/errors.hpp"
#include "awm/generator.hpp"
#include "awm/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace awm;
using namespace awm::test;

TEST_CASE("chain plan") {
    const auto plan = oracle_solve(chain_l1(3));
    REQUIRE(plan.has_value());
    CHECK(*plan == std::vector<Action>{{Verb::Read, 0, {}}, {Verb::Read, 1, {}}, {Verb::Search, 2, {}}});
    CHECK(to_indices(chain_l1(3), *plan) == std::vector<ActionIndex>{0, 1, 5});
}

TEST_CASE("flag next to the entry") {
    auto g = chain_l1(3);
    g.flag.file = 1;
    const auto plan = oracle_solve(g);
    REQUIRE(plan.has_value());
    CHECK(plan->size() == 2);
}

TEST_CASE("ties go to the lowest canonical index") {
    // f0 -> f1, f0 -> f2, f1 -> f3, f2 -> f3; both routes take four actions
    ChallengeGraph g;
    g.level = Level::L1;
    g.n_files = 4;
    g.links = {explicit_link(0, 1), explicit_link(0, 2), explicit_link(1, 3), explicit_link(2, 3)};
    g.flag.file = 3;
    const auto plan = oracle_solve(g);
    REQUIRE(plan.has_value());
    CHECK(to_indices(g, *plan) == std::vector<ActionIndex>{0, 1, 7});
}

TEST_CASE("level 3 plan uses disclosed parameters") {
    const auto g = guarded_l3();
    const auto plan = oracle_solve(g);
    REQUIRE(plan.has_value());
    CHECK(*plan == std::vector<Action>{{Verb::Read, 0, {}},
                                       {Verb::Read, 1, ParamPair{0, 1}},
                                       {Verb::Search, 2, ParamPair{1, 0}}});
}

TEST_CASE("oracle plan replays to a single terminal reward") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GeneratorConfig c;
        c.level = static_cast<Level>(1 + seed % 3);
        c.n = 6;
        if (c.level == Level::L3) c.m = c.o = 2;
        c.seed = seed;
        const auto g = generate(c);
        const auto plan = oracle_solve(g);
        REQUIRE(plan.has_value());
        Env env(make_episode_config(g));
        env.reset();
        for (std::size_t i = 0; i < plan->size(); ++i) {
            const auto r = env.step((*plan)[i]);
            const bool last = i + 1 == plan->size();
            CHECK(r.done == last);
            CHECK(r.reward == (last ? 1.0 : 0.0));
        }
    }
}

TEST_CASE("oracle length equals brute-force optimum on random level 2, N=4") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GeneratorConfig c;
        c.level = Level::L2;
        c.n = 4;
        c.seed = seed;
        const auto g = generate(c);
        const auto plan = oracle_solve(g);
        REQUIRE(plan.has_value());
        BruteForce bf(make_episode_config(g), 10);
        CHECK(bf.shortest() == std::optional<std::uint32_t>(static_cast<std::uint32_t>(plan->size())));
    }
}

TEST_CASE("the mixed-edge challenge needs a deepread") {
    const auto g = mixed_l2();
    BruteForce with(make_episode_config(g), 10);
    CHECK(with.shortest() == std::optional<std::uint32_t>(4));
    // Same site with only Read available: drop implicit links, play it at L1.
    ChallengeGraph read_only = g;
    read_only.level = Level::L1;
    std::erase_if(read_only.links, [](const Link& l) { return l.kind == LinkKind::Implicit; });
    CHECK_FALSE(oracle_solve(read_only).has_value());
}

TEST_CASE("node limit") {
    GeneratorConfig c;
    c.n = 8;
    c.seed = 3;
    CHECK_THROWS_AS(oracle_solve(generate(c), 2), Error);
    OracleStats stats;
    CHECK(oracle_solve(generate(c), kDefaultOracleNodeLimit, &stats).has_value());
    CHECK(stats.expanded > 0);
}

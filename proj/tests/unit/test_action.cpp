#include <doctest.h>

#include <set>

#include "awm/action.hpp"
#include "awm/errors.hpp"
#include "awm/knowledge.hpp"

using namespace awm;

TEST_CASE("action counts") {
    CHECK(action_count(Level::L1, 5) == 10);
    CHECK(action_count(Level::L2, 10) == 30);
    CHECK(action_count(Level::L3, 5, 5, 5) == 390);
    CHECK(action_count(Level::L1, 5, 7, 7) == 10);  // M, O ignored below L3
    CHECK_THROWS_AS(action_count(Level::L1, 0), InvalidConfig);
    CHECK_THROWS_AS(action_count(Level::L3, 3, 0, 2), InvalidConfig);
    CHECK_THROWS_AS(action_count(Level::L3, 3, 2, 0), InvalidConfig);
}

TEST_CASE("canonical index examples") {
    CHECK(action_index({Verb::Read, 0, {}}, Level::L1, 3) == 0);
    CHECK(action_index({Verb::Search, 2, {}}, Level::L1, 3) == 5);
    CHECK(action_index({Verb::Deepread, 0, {}}, Level::L2, 3) == 3);
    CHECK(action_index({Verb::Search, 0, {}}, Level::L2, 3) == 6);
    // L3 N=2 M=2 O=2: 5 variants per file, no-param first
    CHECK(action_index({Verb::Read, 0, ParamPair{0, 0}}, Level::L3, 2, 2, 2) == 1);
    CHECK(action_index({Verb::Read, 0, ParamPair{1, 1}}, Level::L3, 2, 2, 2) == 4);
    CHECK(action_index({Verb::Read, 1, {}}, Level::L3, 2, 2, 2) == 5);
    CHECK(action_index({Verb::Search, 1, ParamPair{1, 1}}, Level::L3, 2, 2, 2) == 29);
}

TEST_CASE("illegal actions are contract violations") {
    CHECK_THROWS_AS(action_index({Verb::Deepread, 0, {}}, Level::L1, 3), ContractViolation);
    CHECK_THROWS_AS(action_index({Verb::Read, 0, ParamPair{0, 0}}, Level::L2, 3), ContractViolation);
    CHECK_THROWS_AS(action_index({Verb::Read, 3, {}}, Level::L1, 3), ContractViolation);
    CHECK_THROWS_AS(action_index({Verb::Read, 0, ParamPair{2, 0}}, Level::L3, 3, 2, 2), ContractViolation);
    CHECK_THROWS_AS(action_from_index(6, Level::L1, 3), ContractViolation);
}

TEST_CASE("index round trip over every small action space") {
    for (Level level : {Level::L1, Level::L2, Level::L3})
        for (std::uint32_t n = 1; n <= 5; ++n)
            for (std::uint32_t m = 1; m <= (level == Level::L3 ? 5u : 1u); ++m)
                for (std::uint32_t o = 1; o <= (level == Level::L3 ? 5u : 1u); ++o) {
                    const std::uint32_t mm = level == Level::L3 ? m : 0;
                    const std::uint32_t oo = level == Level::L3 ? o : 0;
                    const ActionSpace space(level, n, mm, oo);
                    REQUIRE(space.size() == action_count(level, n, mm, oo));
                    ActionIndex prev_verb_block = 0;
                    for (ActionIndex i = 0; i < space.size(); ++i) {
                        const Action a = space.action(i);
                        REQUIRE(space.index(a) == i);
                        REQUIRE(space.allows(a));
                        const auto block = static_cast<ActionIndex>(a.verb);
                        REQUIRE(block >= prev_verb_block);  // verb-major
                        prev_verb_block = block;
                    }
                }
}

TEST_CASE("to_string") {
    CHECK(to_string(Action{Verb::Read, 0, {}}) == "read(f0)");
    CHECK(to_string(Action{Verb::Search, 3, ParamPair{1, 2}}).find("f3") != std::string::npos);
}

TEST_CASE("knowledge index examples") {
    const ActionSpace l1n2(Level::L1, 2);
    KnowledgeState k(l1n2);
    CHECK(knowledge_index(k) == 0);
    CHECK(k.discovered(0));
    CHECK_FALSE(k.discovered(1));
    CHECK(k.mark_tried(0));
    CHECK_FALSE(k.mark_tried(0));
    CHECK(knowledge_index(k) == 1);
    CHECK(knowledge_index(k, Level::L1, 2) == 1);
    CHECK_THROWS_AS(knowledge_index(k, Level::L1, 3), ContractViolation);
    CHECK_THROWS_AS(k.mark_tried(4), ContractViolation);
    CHECK_THROWS_AS(k.discover(2), ContractViolation);
}

TEST_CASE("knowledge index is injective over all 64 subsets at L1 N=3") {
    const ActionSpace space(Level::L1, 3);
    std::set<BigInt> codes;
    for (unsigned subset = 0; subset < 64; ++subset) {
        KnowledgeState k(space);
        for (ActionIndex a = 0; a < 6; ++a)
            if (subset >> a & 1u) k.mark_tried(a);
        const BigInt code = knowledge_index(k);
        CHECK(code == subset);
        codes.insert(code);
    }
    CHECK(codes.size() == 64);
}

TEST_CASE("state key and joint code agree") {
    const ActionSpace space(Level::L3, 4, 3, 3);  // 120 actions: key spans words
    KnowledgeState k(space);
    k.mark_tried(0);
    k.mark_tried(119);
    k.discover(3);
    k.learn(ParamPair{2, 1});
    CHECK(k.knows(ParamPair{2, 1}));
    CHECK(k.known_params() == std::vector<ParamPair>{{2, 1}});
    const BigInt expected = (BigInt(1) | (BigInt(1) << 119)) | ((BigInt(1) | (BigInt(1) << 3)) << 120);
    CHECK(joint_code(k) == expected);
    CHECK(to_bigint(state_key(k)) == expected);
    CHECK(k.discovered_files() == std::vector<FileId>{0, 3});
}

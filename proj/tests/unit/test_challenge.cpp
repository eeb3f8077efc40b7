#include <doctest.h>

#include "awm/challenge.hpp"
#include "awm/challenge_io.hpp"
#include "awm/errors.hpp"
#include "awm/generator.hpp"
#include "awm/oracle.hpp"
#include "support/fixtures.hpp"

using namespace awm;
using namespace awm::test;

TEST_CASE("chain challenge validates clean") {
    const auto r = validate(chain_l1(3));
    CHECK(r.ok());
    CHECK(r.to_string().empty());
}

TEST_CASE("implicit link at L1 is a single violation") {
    auto g = chain_l1(3);
    g.links.push_back(implicit_link(0, 2));
    const auto r = validate(g);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].message == "L1 forbids Implicit");
    CHECK(r.violations[0].field == "links");
    CHECK(r.violations[0].index == 2);
}

TEST_CASE("structural violations are reported together, field ordered") {
    ChallengeGraph g;
    g.level = Level::L2;
    g.n_files = 3;
    g.n_param_names = 1;
    g.links = {explicit_link(0, 0), explicit_link(0, 7), explicit_link(0, 1), explicit_link(0, 1)};
    g.flag.file = 0;
    const auto r = validate(g);
    CHECK(r.contains("L1/L2 require M = 0"));
    CHECK(r.contains("self-link"));
    CHECK(r.contains("file index out of range"));
    CHECK(r.contains("duplicate link"));
    CHECK(r.contains("flag must not be in the entry file"));
    CHECK_FALSE(r.contains("unsolvable"));
    CHECK(r.violations.front().field == "n_param_names");
    CHECK(r.violations.back().field == "flag");
}

TEST_CASE("guards and hints are level 3 only") {
    auto g = fork_l2();
    g.links[0].guard = ParamPair{0, 0};
    g.flag.guard = ParamPair{0, 0};
    const auto r = validate(g);
    CHECK(r.contains("L2 forbids guards"));
    CHECK(r.contains("L2 forbids a flag guard"));
}

TEST_CASE("undisclosed flag guard is unsolvable, and the oracle agrees") {
    ChallengeGraph g;
    g.level = Level::L3;
    g.n_files = 2;
    g.n_param_names = 2;
    g.n_param_values = 2;
    g.links = {explicit_link(0, 1)};
    g.flag = {1, ParamPair{0, 0}};
    const auto r = validate(g);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].message == "unsolvable");
    CHECK_FALSE(is_solvable(g));
    CHECK_FALSE(oracle_solve(g).has_value());
}

TEST_CASE("disconnected flag is unsolvable") {
    auto g = chain_l1(4);
    g.links.pop_back();
    CHECK(validate(g).contains("unsolvable"));
    CHECK_FALSE(oracle_solve(g).has_value());
}

TEST_CASE("a hint with no guard behind it is rejected") {
    auto g = guarded_l3();
    g.links[0].hint = ParamPair{1, 1};
    CHECK(validate(g).contains("hint (p1,v1) matches no downstream guard"));
}

TEST_CASE("out_links examples") {
    const auto chain = chain_l1(3);
    CHECK(out_links(chain, 0, LinkKind::Explicit, std::nullopt) == std::vector<Revealed>{{1, std::nullopt}});

    ChallengeGraph only_implicit;
    only_implicit.level = Level::L2;
    only_implicit.n_files = 3;
    only_implicit.links = {implicit_link(0, 2)};
    only_implicit.flag.file = 2;
    CHECK(out_links(only_implicit, 0, LinkKind::Explicit, std::nullopt).empty());
    CHECK(out_links(only_implicit, 0, LinkKind::Implicit, std::nullopt) == std::vector<Revealed>{{2, std::nullopt}});
}

TEST_CASE("guarded out_links answer exactly one supplied pair") {
    ChallengeGraph g;
    g.level = Level::L3;
    g.n_files = 2;
    g.n_param_names = 3;
    g.n_param_values = 3;
    g.links = {explicit_link(0, 1, ParamPair{0, 1}, std::nullopt)};
    g.flag.file = 1;
    int hits = 0;
    for (std::uint32_t m = 0; m < 3; ++m)
        for (std::uint32_t o = 0; o < 3; ++o) {
            const auto r = out_links(g, 0, LinkKind::Explicit, ParamPair{m, o});
            if (!r.empty()) {
                ++hits;
                CHECK(ParamPair{m, o} == ParamPair{0, 1});
                CHECK(r == std::vector<Revealed>{{1, std::nullopt}});
            }
        }
    CHECK(hits == 1);
    CHECK(out_links(g, 0, LinkKind::Explicit, std::nullopt).empty());
}

TEST_CASE("supplying a parameter only ever adds targets") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        GeneratorConfig c;
        c.level = Level::L3;
        c.n = 5;
        c.m = 2;
        c.o = 2;
        c.seed = seed;
        const auto g = generate(c);
        for (FileId f = 0; f < g.n_files; ++f)
            for (auto kind : {LinkKind::Explicit, LinkKind::Implicit}) {
                const auto base = out_links(g, f, kind, std::nullopt);
                for (std::uint32_t m = 0; m < 2; ++m)
                    for (std::uint32_t o = 0; o < 2; ++o) {
                        const auto more = out_links(g, f, kind, ParamPair{m, o});
                        for (const auto& r : base) CHECK(std::find(more.begin(), more.end(), r) != more.end());
                    }
            }
    }
}

TEST_CASE("json round trip is byte exact") {
    for (const auto& g : {chain_l1(3), mixed_l2(), guarded_l3()}) {
        const std::string text = serialize(g);
        CHECK(serialize(parse_challenge(text)) == text);
        CHECK(parse_challenge(text) == g);
        CHECK(text.find(' ') == std::string::npos);
    }
}

TEST_CASE("serialized layout") {
    CHECK(serialize(chain_l1(2)) ==
          R"({"flag":{"file":1,"guard":null},"format_version":1,"level":1,"links":[{"dst":1,"guard":null,"hint":null,"kind":"explicit","src":0}],"n_files":2,"n_param_names":0,"n_param_values":0,"seed":0})");
}

TEST_CASE("typo in kind names the field") {
    std::string text = serialize(mixed_l2());
    text.replace(text.find("explicit"), 8, "explcit");
    try {
        parse_challenge(text);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.field() == "links[0].kind");
    }
}

TEST_CASE("schema errors") {
    const std::string good = serialize(chain_l1(2));
    CHECK_THROWS_AS(parse_challenge("{"), SchemaError);
    CHECK_THROWS_AS(parse_challenge("[]"), SchemaError);
    std::string extra = good;
    extra.insert(1, R"("colour":1,)");
    CHECK_THROWS_AS(parse_challenge(extra), SchemaError);
    std::string version = good;
    version.replace(version.find("\"format_version\":1"), 18, "\"format_version\":2");
    CHECK_THROWS_AS(parse_challenge(version), SchemaError);
    std::string negative = good;
    negative.replace(negative.find("\"n_files\":2"), 11, "\"n_files\":-2");
    CHECK_THROWS_AS(parse_challenge(negative), SchemaError);
}

#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "awm/challenge_io.hpp"
#include "cli.hpp"

using namespace awm;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
    auto dir = std::filesystem::temp_directory_path() / "awm_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("generate twice gives identical files") {
    const auto dir = scratch();
    const auto a = (dir / "a.json").string();
    const auto b = (dir / "b.json").string();
    const auto r1 = run({"generate", "--level", "1", "--n", "5", "--seed", "7", "-o", a});
    const auto r2 = run({"generate", "--level", "1", "--n", "5", "--seed", "7", "-o", b});
    REQUIRE(r1.code == 0);
    REQUIRE(r2.code == 0);
    CHECK(read_text_file(a) == read_text_file(b));
    CHECK(r1.err.find("seed: 7") != std::string::npos);
}

TEST_CASE("generate without a seed prints the one it drew") {
    const auto r = run({"generate", "--level", "2", "--n", "4", "-o", (scratch() / "s.json").string()});
    CHECK(r.code == 0);
    CHECK(r.err.find("seed: ") != std::string::npos);
}

TEST_CASE("complexity reports level 3 counts") {
    const auto r = run({"complexity", "--level", "3", "--n", "5", "--m", "5", "--o", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("actions=390") != std::string::npos);
    const auto j = run({"complexity", "--level", "4", "--n", "2", "--m", "2", "--o", "2", "--json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"actions\":36") != std::string::npos);
    CHECK(run({"complexity", "--level", "4", "--n", "2", "--m", "3", "--o", "2", "--p", "2"}).code == 1);
}

TEST_CASE("solve then replay") {
    const auto dir = scratch();
    const auto c = (dir / "c.json").string();
    const auto t = (dir / "trace.jsonl").string();
    REQUIRE(run({"generate", "--level", "3", "--n", "5", "--m", "2", "--o", "2", "--seed", "7", "-o", c}).code == 0);
    const std::string before = read_text_file(c);
    const auto s = run({"solve", c, "-o", t});
    REQUIRE(s.code == 0);
    CHECK(s.out.find("steps: ") != std::string::npos);
    CHECK(run({"replay", c, t}).code == 0);
    CHECK(read_text_file(c) == before);

    std::string trace = read_text_file(t);
    trace.replace(trace.find("\"reward\":1"), 10, "\"reward\":0");
    write_text_file(dir / "bad.jsonl", trace);
    CHECK(run({"replay", c, (dir / "bad.jsonl").string()}).code == 5);
}

TEST_CASE("inspect") {
    const auto dir = scratch();
    const auto c = (dir / "i.json").string();
    REQUIRE(run({"generate", "--level", "2", "--n", "5", "--seed", "3", "-o", c}).code == 0);
    const auto r = run({"inspect", c});
    CHECK(r.code == 0);
    CHECK(r.out.find("validation: ok") != std::string::npos);
}

TEST_CASE("train and eval") {
    const auto dir = scratch();
    const auto c = (dir / "t.json").string();
    const auto p = (dir / "policy.json").string();
    const auto curve = (dir / "curve.csv").string();
    REQUIRE(run({"generate", "--level", "1", "--n", "4", "--seed", "2", "-o", c}).code == 0);
    REQUIRE(run({"train", c, "--episodes", "300", "--seed", "1", "-o", p, "--curve", curve}).code == 0);
    CHECK(read_text_file(curve).rfind("episode,steps,reward\n", 0) == 0);
    const auto e = run({"eval", c, "--policy", p, "--episodes", "10", "--seed", "1"});
    CHECK(e.code == 0);
    CHECK(e.out.find("\"solve_rate\"") != std::string::npos);
    CHECK(run({"eval", c, "--random", "--episodes", "10", "--seed", "1"}).code == 0);
}

TEST_CASE("exit codes") {
    const auto dir = scratch();
    const auto c = (dir / "e.json").string();
    REQUIRE(run({"generate", "--level", "2", "--n", "4", "--seed", "5", "-o", c}).code == 0);
    std::string text = read_text_file(c);
    text.replace(text.find("explicit"), 8, "explcit");
    write_text_file(dir / "typo.json", text);
    const auto typo = run({"inspect", (dir / "typo.json").string()});
    CHECK(typo.code == 2);
    CHECK(typo.err.find("links[") != std::string::npos);

    write_text_file(dir / "unsolvable.json",
                    R"({"flag":{"file":2,"guard":null},"format_version":1,"level":1,"links":[)"
                    R"({"dst":1,"guard":null,"hint":null,"kind":"explicit","src":0}],)"
                    R"("n_files":3,"n_param_names":0,"n_param_values":0,"seed":0})");
    CHECK(run({"solve", (dir / "unsolvable.json").string()}).code == 3);
    CHECK(run({"generate", "--level", "1", "--n", "5", "--bogus", "-o", c}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"generate", "--level", "1", "--n", "1", "--seed", "1", "-o", c}).code == 1);
}

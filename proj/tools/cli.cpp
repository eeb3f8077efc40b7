#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "awm/agents.hpp"
#include "awm/batch.hpp"
#include "awm/challenge_io.hpp"
#include "awm/complexity.hpp"
#include "awm/episode_log.hpp"
#include "awm/errors.hpp"
#include "awm/generator.hpp"
#include "awm/oracle.hpp"

namespace awm::cli {

namespace {

namespace fs = std::filesystem;

// CLI11 treats "--o" and "-o" as the same name, so "--o" is renamed before
// parsing.
constexpr const char* kValuesFlag = "--param-values";

std::vector<std::string> rename_values_flag(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    out.reserve(args.size());
    for (const std::string& a : args) {
        if (a == "--o")
            out.emplace_back(kValuesFlag);
        else if (a.rfind("--o=", 0) == 0)
            out.push_back(std::string(kValuesFlag) + a.substr(3));
        else
            out.push_back(a);
    }
    return out;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, std::ostream& err) {
    std::uint64_t seed = 0;
    if (flag) {
        seed = *flag;
    } else if (const char* env = std::getenv("AWM_SEED"); env && *env) {
        try {
            seed = std::stoull(env);
        } catch (const std::exception&) {
            throw InvalidConfig(std::string("AWM_SEED is not an unsigned integer: ") + env);
        }
    } else {
        std::random_device rd;
        seed = (std::uint64_t{rd()} << 32) | rd();
    }
    err << "seed: " << seed << '\n';
    return seed;
}

Level to_level(int level) {
    if (level < 1 || level > 3) throw InvalidConfig("--level must be 1, 2 or 3");
    return static_cast<Level>(level);
}

// Generator flags shared by `generate` and `train`.
struct GenFlags {
    std::optional<std::filesystem::path> config_file;
    std::optional<int> level;
    std::optional<std::uint32_t> n, m, o;
    std::optional<double> density, implicit_fraction, guard_fraction;

    void attach(CLI::App* app) {
        app->add_option("--config", config_file, "Generator config JSON (flags override its fields)");
        app->add_option("--level", level, "Abstraction level 1-3");
        app->add_option("--n", n, "Number of files N");
        app->add_option("--m", m, "Number of parameter names M (L3)");
        app->add_option(kValuesFlag, o, "Number of parameter values O (L3), given as --o");
        app->add_option("--density", density, "Distractor link density in (0,1]");
        app->add_option("--implicit-fraction", implicit_fraction, "Share of implicit links in [0,1)");
        app->add_option("--guard-fraction", guard_fraction, "Share of guarded links in [0,1)");
    }

    bool any() const { return config_file || level || n; }

    GeneratorConfig build(std::uint64_t seed) const {
        GeneratorConfig c = config_file ? read_generator_config(*config_file) : GeneratorConfig{};
        if (!config_file && !(level && n)) throw InvalidConfig("--level and --n are required");
        if (level) c.level = to_level(*level);
        if (n) c.n = *n;
        if (m) c.m = *m;
        if (o) c.o = *o;
        if (density) c.explicit_density = *density;
        if (implicit_fraction) c.implicit_fraction = *implicit_fraction;
        if (guard_fraction) c.guard_fraction = *guard_fraction;
        c.seed = seed;
        return c;
    }
};

struct EpisodeFlags {
    std::uint64_t max_steps = 0;
    double step_reward = 0.0;
    double flag_reward = 1.0;

    void attach(CLI::App* app) {
        app->add_option("--max-steps", max_steps, "Step budget per episode (0 = 20 x action count)");
        app->add_option("--step-reward", step_reward, "Reward of every non-flag step");
        app->add_option("--flag-reward", flag_reward, "Reward of the flag step");
    }

    EpisodeConfig build(ChallengeGraph g) const {
        return resolve(make_episode_config(std::move(g), max_steps, step_reward, flag_reward));
    }
};

int cmd_generate(const GenFlags& gen, const std::optional<std::uint64_t>& seed_flag, std::uint64_t count,
                 const fs::path& output, std::ostream& out, std::ostream& err) {
    const std::uint64_t seed = resolve_seed(seed_flag, err);
    const GeneratorConfig base = gen.build(seed);
    if (count == 0) throw InvalidConfig("--count must be >= 1");
    if (count == 1) {
        write_challenge(output, generate(base));
        out << output.string() << '\n';
        return kOk;
    }
    std::vector<std::uint64_t> seeds(count);
    for (std::uint64_t i = 0; i < count; ++i) seeds[i] = seed + i;
    const auto challenges = generate_batch(base, seeds);
    fs::create_directories(output);
    for (std::size_t i = 0; i < challenges.size(); ++i) {
        const fs::path file = output / ("challenge_" + std::to_string(seeds[i]) + ".json");
        write_challenge(file, challenges[i]);
        out << file.string() << '\n';
    }
    return kOk;
}

int cmd_inspect(const fs::path& file, std::ostream& out) {
    const ChallengeGraph g = parse_challenge(read_text_file(file));
    const ValidationReport report = validate(g);
    std::size_t explicit_links = 0, guarded = 0, hinted = 0;
    for (const Link& l : g.links) {
        explicit_links += l.kind == LinkKind::Explicit;
        guarded += l.guard.has_value();
        hinted += l.hint.has_value();
    }
    out << "level: " << static_cast<int>(g.level) << '\n'
        << "files: " << g.n_files << '\n'
        << "param names: " << g.n_param_names << '\n'
        << "param values: " << g.n_param_values << '\n'
        << "links: " << g.links.size() << " (explicit " << explicit_links << ", implicit "
        << g.links.size() - explicit_links << ", guarded " << guarded << ", hinted " << hinted << ")\n"
        << "flag: f" << g.flag.file << (g.flag.guard ? " (guarded)" : "") << '\n'
        << "seed: " << g.seed << '\n';
    if (report.ok()) {
        out << "action count: " << ActionSpace(g).size() << '\n';
        const auto solution = oracle_solve(g);
        out << "oracle length: " << (solution ? std::to_string(solution->size()) : "unsolvable") << '\n';
        out << "validation: ok\n";
        return kOk;
    }
    out << "validation: " << report.violations.size() << " violation(s)\n" << report.to_string();
    return kUnsolvable;
}

int cmd_solve(const fs::path& file, const EpisodeFlags& ep, const fs::path& trace, std::ostream& out,
              std::ostream& err) {
    const ChallengeGraph g = regenerate_from_file(file);
    const auto solution = oracle_solve(g);
    if (!solution) {
        err << "unsolvable\n";
        return kUnsolvable;
    }
    const ActionSpace space(g);
    for (std::size_t i = 0; i < solution->size(); ++i)
        out << i + 1 << ' ' << to_string((*solution)[i]) << " [" << space.index((*solution)[i]) << "]\n";
    out << "steps: " << solution->size() << '\n';
    const auto records = record_episode(ep.build(g), to_indices(g, *solution));
    write_text_file(trace, format_episode_log(records));
    out << "trace: " << trace.string() << '\n';
    return kOk;
}

int cmd_replay(const fs::path& file, const fs::path& trace, const EpisodeFlags& ep, std::ostream& out,
               std::ostream& err) {
    const ChallengeGraph g = regenerate_from_file(file);
    const auto records = read_episode_log(trace);
    const ReplayReport report = replay(ep.build(g), records);
    if (!report.ok) {
        err << "replay mismatch: " << report.message << '\n';
        return kReplayMismatch;
    }
    out << "replay ok: " << report.checked << " step(s) reproduced\n";
    return kOk;
}

struct TrainFlags {
    std::uint64_t episodes = 5000;
    Hyperparams hp;
    fs::path policy_out = "policy.json";
    fs::path curve_out = "curve.csv";

    void attach(CLI::App* app) {
        app->add_option("--episodes", episodes, "Training episodes");
        app->add_option("--alpha", hp.alpha, "Learning rate");
        app->add_option("--gamma", hp.gamma, "Discount");
        app->add_option("--epsilon-start", hp.epsilon_start, "Initial exploration rate");
        app->add_option("--epsilon-end", hp.epsilon_end, "Final exploration rate");
        app->add_option("--anneal-fraction", hp.anneal_fraction, "Share of episodes spent annealing epsilon");
        app->add_option("--max-actions", hp.max_action_count, "Refuse action spaces larger than this");
        app->add_option("-o,--output", policy_out, "Policy JSON output");
        app->add_option("--curve", curve_out, "Learning-curve CSV output");
    }
};

int cmd_train(const std::optional<fs::path>& file, const GenFlags& gen, const EpisodeFlags& ep, const TrainFlags& tf,
              const std::optional<std::uint64_t>& seed_flag, std::ostream& out, std::ostream& err) {
    const std::uint64_t seed = resolve_seed(seed_flag, err);
    if (file && gen.any()) throw InvalidConfig("give either a challenge file or generator flags, not both");
    const ChallengeGraph g = file ? regenerate_from_file(*file) : generate(gen.build(seed));
    const TrainResult result = train(ep.build(g), tf.hp, seed, tf.episodes);
    write_text_file(tf.policy_out, policy_to_json(result.policy) + "\n");
    write_text_file(tf.curve_out, curve_csv(result.curve));
    const EvalStats greedy = evaluate(result.policy, ep.build(g), 1, seed);
    out << "states: " << result.q.size() << '\n'
        << "greedy: " << to_json(greedy) << '\n'
        << "policy: " << tf.policy_out.string() << '\n'
        << "curve: " << tf.curve_out.string() << '\n';
    return kOk;
}

int cmd_eval(const fs::path& file, const std::optional<fs::path>& policy_file, bool random, std::uint64_t episodes,
             const EpisodeFlags& ep, const std::optional<std::uint64_t>& seed_flag,
             const std::optional<fs::path>& output, std::ostream& out, std::ostream& err) {
    const std::uint64_t seed = resolve_seed(seed_flag, err);
    const ChallengeGraph g = regenerate_from_file(file);
    if (random == policy_file.has_value()) throw InvalidConfig("give exactly one of --policy or --random");
    const EvalStats stats = random ? evaluate_random(ep.build(g), episodes, seed)
                                   : evaluate(policy_from_json(read_text_file(*policy_file)), ep.build(g), episodes, seed);
    const std::string json = to_json(stats);
    if (output) write_text_file(*output, json + "\n");
    out << json << '\n';
    return kOk;
}

int cmd_complexity(int level, const std::optional<std::uint64_t>& n, const std::optional<std::uint64_t>& m,
                   const std::optional<std::uint64_t>& o, const std::optional<std::uint64_t>& p, bool json,
                   bool table, std::ostream& out) {
    std::vector<ComplexityReport> rows;
    if (table) {
        rows = reference_rows(level);
    } else {
        if (!n) throw InvalidConfig("--n is required (or use --table)");
        rows.push_back(complexity_report(level, *n, m, o, p));
    }
    if (json) {
        for (const auto& r : rows) out << to_json(r) << '\n';
    } else if (table) {
        out << format_table(rows);
    } else {
        const ComplexityReport& r = rows.front();
        out << "level=" << r.level << " N=" << r.n;
        if (r.m) out << " M=" << *r.m;
        if (r.o) out << " O=" << *r.o;
        if (r.p) out << " P=" << *r.p;
        out << " actions=" << r.actions.str() << " states=" << scientific(r.states, 3) << '\n';
        out << format_table(rows);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simulator of capture-the-flag web challenges (levels 1-3)", "awm"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed;
    EpisodeFlags ep;
    GenFlags gen;

    auto* generate_cmd = app.add_subcommand("generate", "Generate challenge JSON file(s)");
    std::uint64_t count = 1;
    fs::path gen_out;
    gen.attach(generate_cmd);
    generate_cmd->add_option("--seed", seed, "Seed (falls back to AWM_SEED, then a random seed)");
    generate_cmd->add_option("--count", count, "Number of challenges (seeds seed..seed+count-1)");
    generate_cmd->add_option("-o,--output", gen_out, "Output file, or directory when --count > 1")->required();

    auto* inspect_cmd = app.add_subcommand("inspect", "Validate a challenge and print summary statistics");
    fs::path inspect_file;
    inspect_cmd->add_option("challenge", inspect_file)->required();
    inspect_cmd->add_option("--seed", seed, "Unused; accepted for uniformity");

    auto* solve_cmd = app.add_subcommand("solve", "Run the oracle and write its episode trace");
    fs::path solve_file, trace_out = "trace.jsonl";
    solve_cmd->add_option("challenge", solve_file)->required();
    solve_cmd->add_option("-o,--output", trace_out, "Episode log output");
    solve_cmd->add_option("--seed", seed, "Unused; accepted for uniformity");
    ep.attach(solve_cmd);

    auto* train_cmd = app.add_subcommand("train", "Tabular Q-learning on a challenge file or a generated one");
    std::optional<fs::path> train_file;
    TrainFlags tf;
    train_cmd->add_option("challenge", train_file);
    train_cmd->add_option("--seed", seed, "Training (and generation) seed");
    gen.attach(train_cmd);
    tf.attach(train_cmd);
    ep.attach(train_cmd);

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a policy (or the uniform random policy)");
    fs::path eval_file;
    std::optional<fs::path> policy_file, eval_out;
    bool random_policy = false;
    std::uint64_t eval_episodes = 1000;
    eval_cmd->add_option("challenge", eval_file)->required();
    eval_cmd->add_option("--policy", policy_file, "Policy JSON");
    eval_cmd->add_flag("--random", random_policy, "Uniform random policy");
    eval_cmd->add_option("--episodes", eval_episodes, "Evaluation episodes");
    eval_cmd->add_option("--seed", seed, "Evaluation seed");
    eval_cmd->add_option("-o,--output", eval_out, "Stats JSON output");
    ep.attach(eval_cmd);

    auto* complexity_cmd = app.add_subcommand("complexity", "Action and state counts");
    int c_level = 1;
    std::optional<std::uint64_t> c_n, c_m, c_o, c_p;
    bool c_json = false, c_table = false;
    complexity_cmd->add_option("--level", c_level, "Level 1-4")->required();
    complexity_cmd->add_option("--n", c_n, "Files N");
    complexity_cmd->add_option("--m", c_m, "Parameter names M");
    complexity_cmd->add_option(kValuesFlag, c_o, "Parameter values O, given as --o");
    complexity_cmd->add_option("--p", c_p, "Level 4: maximum parameter-list length (0, 1 or M)");
    complexity_cmd->add_flag("--json", c_json, "JSON output");
    complexity_cmd->add_flag("--table", c_table, "Tabulate the level's reference rows");
    complexity_cmd->add_option("--seed", seed, "Unused; accepted for uniformity");

    auto* replay_cmd = app.add_subcommand("replay", "Check that an episode log reproduces on a challenge");
    fs::path replay_file, replay_trace;
    replay_cmd->add_option("challenge", replay_file)->required();
    replay_cmd->add_option("trace", replay_trace)->required();
    replay_cmd->add_option("--seed", seed, "Unused; accepted for uniformity");
    ep.attach(replay_cmd);

    try {
        const std::vector<std::string> renamed = rename_values_flag(args);
        std::vector<std::string> reversed(renamed.rbegin(), renamed.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (generate_cmd->parsed()) return cmd_generate(gen, seed, count, gen_out, out, err);
        if (train_cmd->parsed()) return cmd_train(train_file, gen, ep, tf, seed, out, err);
        if (eval_cmd->parsed())
            return cmd_eval(eval_file, policy_file, random_policy, eval_episodes, ep, seed, eval_out, out, err);
        // Deterministic subcommands: report the seed only when one was given.
        if (seed || std::getenv("AWM_SEED"))
            resolve_seed(seed, err);
        else
            err << "seed: none (deterministic)\n";
        if (inspect_cmd->parsed()) return cmd_inspect(inspect_file, out);
        if (solve_cmd->parsed()) return cmd_solve(solve_file, ep, trace_out, out, err);
        if (complexity_cmd->parsed()) return cmd_complexity(c_level, c_n, c_m, c_o, c_p, c_json, c_table, out);
        if (replay_cmd->parsed()) return cmd_replay(replay_file, replay_trace, ep, out, err);
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << '\n';
        return kSchemaError;
    } catch (const InvalidChallenge& e) {
        err << e.what();
        return kUnsolvable;
    } catch (const GenerationError& e) {
        err << "generation failure: " << e.what() << '\n';
        return kUnsolvable;
    } catch (const ContractViolation& e) {
        err << "contract violation: " << e.what() << '\n';
        return kContractViolation;
    } catch (const InvalidConfig& e) {
        err << "invalid configuration: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace awm::cli

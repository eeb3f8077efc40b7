#include "awm/agents.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>

#include <json.hpp>

#include "awm/errors.hpp"
#include "awm/rng.hpp"

namespace awm {

using nlohmann::json;

namespace {

std::string format_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

StateKey key_from_bigint(BigInt code, std::uint64_t state_bits) {
    StateKey key;
    key.words.assign((state_bits + 63) / 64, 0);
    for (auto& w : key.words) {
        w = static_cast<std::uint64_t>(code & std::numeric_limits<std::uint64_t>::max());
        code >>= 64;
    }
    if (code != 0) throw SchemaError("policy", "state code wider than state_bits");
    return key;
}

}  // namespace

void check(const Hyperparams& hp) {
    if (!(hp.alpha > 0.0 && hp.alpha <= 1.0)) throw InvalidConfig("alpha must be in (0, 1]");
    if (!(hp.gamma >= 0.0 && hp.gamma <= 1.0)) throw InvalidConfig("gamma must be in [0, 1]");
    for (double e : {hp.epsilon_start, hp.epsilon_end})
        if (!(e >= 0.0 && e <= 1.0)) throw InvalidConfig("epsilon must be in [0, 1]");
    if (!(hp.anneal_fraction >= 0.0 && hp.anneal_fraction <= 1.0))
        throw InvalidConfig("anneal_fraction must be in [0, 1]");
}

double epsilon_at(const Hyperparams& hp, std::uint64_t episode, std::uint64_t total) {
    const double horizon = hp.anneal_fraction * static_cast<double>(total);
    const auto e = static_cast<double>(episode);
    if (horizon <= 0.0 || e >= horizon) return hp.epsilon_end;
    return hp.epsilon_start + (hp.epsilon_end - hp.epsilon_start) * (e / horizon);
}

std::vector<double>& QTable::row(const StateKey& key) {
    auto it = rows_.find(key);
    if (it == rows_.end()) it = rows_.emplace(key, std::vector<double>(action_count_, 0.0)).first;
    return it->second;
}

const std::vector<double>* QTable::find(const StateKey& key) const {
    const auto it = rows_.find(key);
    return it == rows_.end() ? nullptr : &it->second;
}

double QTable::max_value(const StateKey& key) const {
    const auto* r = find(key);
    return r ? *std::max_element(r->begin(), r->end()) : 0.0;
}

double QTable::max_abs() const {
    double m = 0.0;
    for (const auto& [_, r] : rows_)
        for (double v : r) m = std::max(m, std::abs(v));
    return m;
}

ActionIndex greedy_action(std::span<const double> values) {
    return static_cast<ActionIndex>(std::max_element(values.begin(), values.end()) - values.begin());
}

ActionIndex Policy::act(const KnowledgeState& state) const {
    const auto it = table.find(state_key(state));
    return it == table.end() ? default_action : it->second;
}

ActionChooser Policy::chooser() const {
    return [this](const KnowledgeState& s, SplitMix64&) { return act(s); };
}

Policy greedy_policy(const QTable& q, std::uint64_t state_bits) {
    Policy p;
    p.action_count = q.action_count();
    p.state_bits = state_bits;
    for (const auto& [key, values] : q.rows()) p.table.emplace(key, greedy_action(values));
    return p;
}

Policy policy_from_actions(const EpisodeConfig& config, const std::vector<ActionIndex>& actions) {
    Env env(config);
    env.reset();
    Policy p;
    p.action_count = env.action_space().size();
    p.state_bits = p.action_count + env.challenge().n_files;
    for (ActionIndex a : actions) {
        if (env.done()) break;
        p.table.insert_or_assign(state_key(env.knowledge()), a);
        env.step(a);
    }
    return p;
}

std::string policy_to_json(const Policy& p) {
    json table = json::object();
    for (const auto& [key, action] : p.table) table[to_bigint(key).str()] = action;
    return json{{"format_version", 1},
                {"action_count", p.action_count},
                {"state_bits", p.state_bits},
                {"default_action", p.default_action},
                {"policy", std::move(table)}}
        .dump();
}

Policy policy_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("$", "expected an object");
    for (const char* k : {"format_version", "action_count", "state_bits", "default_action", "policy"})
        if (!j.contains(k)) throw SchemaError(k, "missing field");
    if (j.size() != 5) throw SchemaError("$", "unexpected fields");
    for (const char* k : {"format_version", "action_count", "state_bits", "default_action"})
        if (!j[k].is_number_unsigned()) throw SchemaError(k, "expected a non-negative integer");
    if (j["format_version"] != 1) throw SchemaError("format_version", "unsupported version");

    Policy p;
    p.action_count = j["action_count"].get<std::uint64_t>();
    p.state_bits = j["state_bits"].get<std::uint64_t>();
    p.default_action = j["default_action"].get<std::uint64_t>();
    if (p.default_action >= p.action_count) throw SchemaError("default_action", "out of range");
    if (!j["policy"].is_object()) throw SchemaError("policy", "expected an object");
    for (const auto& [code, action] : j["policy"].items()) {
        const std::string where = "policy." + code;
        if (code.empty() || code.find_first_not_of("0123456789") != std::string::npos)
            throw SchemaError(where, "state code must be a decimal integer");
        if (!action.is_number_unsigned() || action.get<std::uint64_t>() >= p.action_count)
            throw SchemaError(where, "action index out of range");
        p.table.emplace(key_from_bigint(BigInt(code), p.state_bits), action.get<std::uint64_t>());
    }
    return p;
}

std::string curve_csv(const std::vector<CurveRow>& curve) {
    std::string out = "episode,steps,reward\n";
    for (const CurveRow& r : curve)
        out += std::to_string(r.episode) + "," + std::to_string(r.steps) + "," + format_real(r.reward) + "\n";
    return out;
}

TrainResult train(const EpisodeConfig& config, const Hyperparams& hp, std::uint64_t seed, std::uint64_t episodes) {
    check(hp);
    if (episodes == 0) throw InvalidConfig("train: episodes must be >= 1");
    Env env(config);
    const std::uint64_t n_actions = env.action_space().size();
    if (n_actions > hp.max_action_count)
        throw InvalidConfig("train: " + std::to_string(n_actions) + " actions exceed the tabular cap of " +
                            std::to_string(hp.max_action_count) + "; tabular Q-learning does not scale to this level");

    TrainResult result;
    result.q = QTable(n_actions);
    result.curve.reserve(episodes);
    SplitMix64 rng(seed);

    for (std::uint64_t ep = 0; ep < episodes; ++ep) {
        const double epsilon = epsilon_at(hp, ep, episodes);
        env.reset(derive_seed(seed, ep));
        StateKey key = state_key(env.knowledge());
        double total = 0.0;
        while (!env.done()) {
            std::vector<double>& values = result.q.row(key);
            const ActionIndex a = rng.uniform() < epsilon ? rng.below(n_actions) : greedy_action(values);
            const StepResult step = env.step(a);
            total += step.reward;
            StateKey next = state_key(env.knowledge());
            const bool terminal = step.done && !step.info.truncated;
            const double target = step.reward + (terminal ? 0.0 : hp.gamma * result.q.max_value(next));
            values[a] += hp.alpha * (target - values[a]);
            key = std::move(next);
        }
        result.curve.push_back({ep + 1, env.steps(), total});
    }
    result.policy = greedy_policy(result.q, n_actions + env.challenge().n_files);
    return result;
}

std::vector<TrainResult> train_many(std::span<const EpisodeConfig> configs, const Hyperparams& hp,
                                    std::uint64_t seed, std::uint64_t episodes) {
    std::vector<TrainResult> out(configs.size());
    std::vector<std::exception_ptr> errors(configs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(configs.size()); ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            out[k] = train(configs[k], hp, derive_seed(seed, k), episodes);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<TrainResult> train_many_serial(std::span<const EpisodeConfig> configs, const Hyperparams& hp,
                                           std::uint64_t seed, std::uint64_t episodes) {
    std::vector<TrainResult> out;
    out.reserve(configs.size());
    for (std::size_t k = 0; k < configs.size(); ++k) out.push_back(train(configs[k], hp, derive_seed(seed, k), episodes));
    return out;
}

EvalStats summarize(std::span<const EpisodeSummary> episodes) {
    EvalStats s;
    s.episodes = episodes.size();
    if (episodes.empty()) return s;
    std::uint64_t solved = 0;
    double steps = 0.0;
    double reward = 0.0;
    for (const EpisodeSummary& e : episodes) {
        solved += e.solved ? 1 : 0;
        steps += static_cast<double>(e.steps);
        reward += e.total_reward;
    }
    const auto n = static_cast<double>(episodes.size());
    s.solve_rate = static_cast<double>(solved) / n;
    s.mean_steps = steps / n;
    s.mean_reward = reward / n;
    return s;
}

EvalStats evaluate(const Policy& policy, const EpisodeConfig& config, std::uint64_t episodes, std::uint64_t seed) {
    const EpisodeConfig resolved = resolve(config);
    const ActionSpace space(*resolved.challenge);
    if (policy.action_count != space.size() || policy.state_bits != space.size() + resolved.challenge->n_files)
        throw ContractViolation("evaluate: policy action space (" + std::to_string(policy.action_count) +
                                " actions) does not match the challenge (" + std::to_string(space.size()) + ")");
    const auto runs = rollout_batch(resolved, policy.chooser(), episodes, seed);
    return summarize(runs);
}

EvalStats evaluate_random(const EpisodeConfig& config, std::uint64_t episodes, std::uint64_t seed) {
    const EpisodeConfig resolved = resolve(config);
    const auto runs = rollout_batch(resolved, uniform_random_chooser(ActionSpace(*resolved.challenge).size()),
                                    episodes, seed);
    return summarize(runs);
}

std::string to_json(const EvalStats& s) {
    return json{{"format_version", 1},
                {"episodes", s.episodes},
                {"solve_rate", s.solve_rate},
                {"mean_steps", s.mean_steps},
                {"mean_reward", s.mean_reward}}
        .dump();
}

}  // namespace awm

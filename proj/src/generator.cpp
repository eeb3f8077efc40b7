#include "awm/generator.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "awm/challenge_io.hpp"
#include "awm/errors.hpp"
#include "awm/rng.hpp"

namespace awm {

namespace {

ParamPair random_pair(SplitMix64& rng, const GeneratorConfig& c) {
    const auto name = static_cast<std::uint32_t>(rng.below(c.m));
    const auto value = static_cast<std::uint32_t>(rng.below(c.o));
    return {name, value};
}

LinkKind random_kind(SplitMix64& rng, const GeneratorConfig& c) {
    if (c.level == Level::L1) return LinkKind::Explicit;
    return rng.bernoulli(c.implicit_fraction) ? LinkKind::Implicit : LinkKind::Explicit;
}

// Index of a random path link before `limit` that carries no hint yet.
std::optional<std::size_t> free_hint_slot(SplitMix64& rng, const std::vector<Link>& path, std::size_t limit) {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < limit; ++i)
        if (!path[i].hint) free.push_back(i);
    if (free.empty()) return std::nullopt;
    return free[rng.below(free.size())];
}

ChallengeGraph attempt(const GeneratorConfig& c, std::uint64_t stream_seed) {
    SplitMix64 rng(stream_seed);
    const bool parametric = c.level == Level::L3;

    ChallengeGraph g;
    g.level = c.level;
    g.n_files = c.n;
    g.n_param_names = parametric ? c.m : 0;
    g.n_param_values = parametric ? c.o : 0;
    g.seed = c.seed;
    g.flag.file = static_cast<FileId>(1 + rng.below(c.n - 1));

    std::vector<FileId> others;
    for (FileId f = 1; f < c.n; ++f)
        if (f != g.flag.file) others.push_back(f);
    for (std::size_t i = others.size(); i > 1; --i) std::swap(others[i - 1], others[rng.below(i)]);
    const std::size_t hops = rng.below(c.n - 1);

    std::vector<FileId> route{kEntryFile};
    route.insert(route.end(), others.begin(), others.begin() + static_cast<std::ptrdiff_t>(hops));
    route.push_back(g.flag.file);

    std::vector<Link> path;
    for (std::size_t i = 0; i + 1 < route.size(); ++i) path.push_back({route[i], route[i + 1], random_kind(rng, c), {}, {}});

    if (parametric) {
        // The first link leaves the entry file, which is known without hints.
        for (std::size_t j = 1; j < path.size(); ++j) {
            if (!rng.bernoulli(c.guard_fraction)) continue;
            const ParamPair guard = random_pair(rng, c);
            if (auto slot = free_hint_slot(rng, path, j)) {
                path[j].guard = guard;
                path[*slot].hint = guard;
            }
        }
        if (rng.bernoulli(c.guard_fraction)) {
            const ParamPair guard = random_pair(rng, c);
            if (auto slot = free_hint_slot(rng, path, path.size())) {
                g.flag.guard = guard;
                path[*slot].hint = guard;
            }
        }
    }

    std::set<std::pair<FileId, FileId>> used;
    for (const Link& l : path) used.insert({l.src, l.dst});
    g.links = std::move(path);

    for (FileId u = 0; u < c.n; ++u) {
        for (FileId v = 1; v < c.n; ++v) {
            if (u == v || used.contains({u, v})) continue;
            if (!rng.bernoulli(c.explicit_density)) continue;
            Link l{u, v, random_kind(rng, c), {}, {}};
            if (parametric && rng.bernoulli(c.guard_fraction)) l.guard = random_pair(rng, c);
            g.links.push_back(l);
        }
    }

    std::sort(g.links.begin(), g.links.end(), [](const Link& a, const Link& b) {
        return std::tie(a.src, a.dst, a.kind, a.guard, a.hint) < std::tie(b.src, b.dst, b.kind, b.guard, b.hint);
    });
    return g;
}

}  // namespace

void check(const GeneratorConfig& c) {
    const int lvl = static_cast<int>(c.level);
    if (lvl < 1 || lvl > 3) throw InvalidConfig("generator: level must be 1, 2 or 3");
    if (c.n < 2) throw InvalidConfig("generator: N must be >= 2");
    if (c.level == Level::L3 && (c.m < 1 || c.o < 1)) throw InvalidConfig("generator: L3 requires M >= 1 and O >= 1");
    if (!(c.explicit_density > 0.0 && c.explicit_density <= 1.0))
        throw InvalidConfig("generator: explicit_density must be in (0, 1]");
    if (!(c.implicit_fraction >= 0.0 && c.implicit_fraction < 1.0))
        throw InvalidConfig("generator: implicit_fraction must be in [0, 1)");
    if (!(c.guard_fraction >= 0.0 && c.guard_fraction < 1.0))
        throw InvalidConfig("generator: guard_fraction must be in [0, 1)");
}

ChallengeGraph generate(const GeneratorConfig& config) {
    check(config);
    std::string last_error;
    for (std::size_t retry = 0; retry < kMaxGenerationRetries; ++retry) {
        ChallengeGraph g = attempt(config, derive_seed(config.seed, retry));
        const ValidationReport report = validate(g);
        if (report.ok()) return g;
        last_error = report.to_string();
    }
    throw GenerationError(kMaxGenerationRetries, "no valid challenge generated: " + last_error);
}

GeneratorConfig read_generator_config(const std::filesystem::path& path) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("$", "expected an object");

    GeneratorConfig c;
    auto unsigned_field = [&](const std::string& key) {
        const json& v = j[key];
        if (!v.is_number_unsigned()) throw SchemaError(key, "expected a non-negative integer");
        return v.get<std::uint64_t>();
    };
    auto real_field = [&](const std::string& key) {
        if (!j[key].is_number()) throw SchemaError(key, "expected a number");
        return j[key].get<double>();
    };
    for (const auto& [key, _] : j.items()) {
        if (key == "level") {
            const auto lvl = unsigned_field(key);
            if (lvl < 1 || lvl > 3) throw SchemaError(key, "expected 1, 2 or 3");
            c.level = static_cast<Level>(lvl);
        } else if (key == "n" || key == "m" || key == "o") {
            const auto v = unsigned_field(key);
            if (v > 0xFFFFFFFFULL) throw SchemaError(key, "value too large");
            (key == "n" ? c.n : key == "m" ? c.m : c.o) = static_cast<std::uint32_t>(v);
        } else if (key == "explicit_density") {
            c.explicit_density = real_field(key);
        } else if (key == "implicit_fraction") {
            c.implicit_fraction = real_field(key);
        } else if (key == "guard_fraction") {
            c.guard_fraction = real_field(key);
        } else if (key == "seed") {
            c.seed = unsigned_field(key);
        } else {
            throw SchemaError(key, "unknown field");
        }
    }
    return c;
}

}  // namespace awm

#pragma once

#include <cstdint>
#include <filesystem>

#include "awm/challenge.hpp"

namespace awm {

struct GeneratorConfig {
    Level level = Level::L1;
    std::uint32_t n = 5;  // files
    std::uint32_t m = 0;  // parameter names (L3)
    std::uint32_t o = 0;  // parameter values (L3)
    double explicit_density = 0.25;
    double implicit_fraction = 0.3;
    double guard_fraction = 0.3;
    std::uint64_t seed = 0;
};

// Throws InvalidConfig.
void check(const GeneratorConfig& config);

// Builds a random solvable challenge, as a pure function of the config:
//  1. the flag file is drawn uniformly from 1..N-1;
//  2. a solution path 0 -> p1 -> ... -> flag through distinct random files is
//     planted (implicit with probability implicit_fraction at L2/L3; at L3,
//     later path links and the flag are guarded with probability
//     guard_fraction, and each guard's hint is placed on an earlier path link);
//  3. every remaining ordered pair (u, v), v != 0, gets a distractor link with
//     probability explicit_density (same kind/guard rules, no hints);
//  4. the result is validated; a failure retries with a derived seed.
// Throws GenerationError when no valid challenge appears within the retry
// bound.
ChallengeGraph generate(const GeneratorConfig& config);

inline constexpr std::size_t kMaxGenerationRetries = 64;

// Reads a GeneratorConfig from a JSON object using the field names above
// (level as 1..3). Missing fields keep their defaults; unknown fields are a
// SchemaError.
GeneratorConfig read_generator_config(const std::filesystem::path& path);

}  // namespace awm

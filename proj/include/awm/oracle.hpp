#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "awm/action.hpp"
#include "awm/challenge.hpp"

namespace awm {

inline constexpr std::size_t kDefaultOracleNodeLimit = std::size_t{1} << 22;

struct OracleStats {
    std::size_t expanded = 0;  // knowledge states expanded
    std::size_t generated = 0;  // distinct knowledge states reached
};

// Systematic solver: breadth-first expansion over (discovered files, known
// parameter pairs). At every state it tries each legal action in canonical
// order (parameterised requests only with parameterless or disclosed pairs)
// until a search returns the flag. Returns a shortest such action sequence,
// ties broken by the lowest canonical index sequence, or nullopt if the flag
// is out of reach. Throws Error when more than `node_limit` states would be
// generated.
std::optional<std::vector<Action>> oracle_solve(const ChallengeGraph& challenge,
                                                std::size_t node_limit = kDefaultOracleNodeLimit,
                                                OracleStats* stats = nullptr);

std::vector<ActionIndex> to_indices(const ChallengeGraph& challenge, const std::vector<Action>& actions);

}  // namespace awm

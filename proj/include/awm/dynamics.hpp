#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "awm/action.hpp"
#include "awm/challenge.hpp"

namespace awm {

enum class ObservationKind : std::uint8_t { Revealed, FlagFound, Nothing, Invalid };

// The webserver's answer to one request. `revealed` is empty unless
// kind == Revealed.
struct Observation {
    ObservationKind kind = ObservationKind::Nothing;
    std::vector<Revealed> revealed;

    friend bool operator==(const Observation&, const Observation&) = default;
};

struct TransitionOutcome {
    Observation observation;
    bool flag_taken = false;
};

std::string_view to_string(ObservationKind kind) noexcept;
ObservationKind observation_kind_from_string(std::string_view name);

// Level transition functions. Pure in (challenge, action): the server is
// static, so nothing depends on episode history. Legality (file discovered)
// is the caller's job.
//
// L1: read -> explicit out-links, search -> flag test. Deepread or a
//     parameter is a ContractViolation.
TransitionOutcome transition_l1(const ChallengeGraph& challenge, const Action& action);

// L2: read -> explicit out-links, deepread -> implicit out-links, search as L1.
TransitionOutcome transition_l2(const ChallengeGraph& challenge, const Action& action);

// L3: as L2, plus an optional parameter pair. Read/deepread return the union
// of unguarded links and links guarded by that pair, with hints. Search
// succeeds iff the file holds the flag and the flag guard (if any) equals the
// pair. Out-of-range pairs give an Invalid observation.
TransitionOutcome transition_l3(const ChallengeGraph& challenge, const Action& action);

// Dispatches on challenge.level.
TransitionOutcome transition(const ChallengeGraph& challenge, const Action& action);

}  // namespace awm

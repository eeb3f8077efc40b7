#include "awm/dynamics.hpp"

#include <string>

#include "awm/errors.hpp"

namespace awm {

namespace {

void require_level(const ChallengeGraph& c, Level expected) {
    if (c.level != expected)
        throw ContractViolation(std::string("transition for ") + std::string(to_string(expected)) +
                                " called on a " + std::string(to_string(c.level)) + " challenge");
}

void require_file(const ChallengeGraph& c, const Action& a) {
    if (a.file >= c.n_files) throw ContractViolation("action file out of range: " + std::to_string(a.file));
}

TransitionOutcome reveal(const ChallengeGraph& c, FileId file, LinkKind kind, std::optional<ParamPair> p) {
    return {Observation{ObservationKind::Revealed, out_links(c, file, kind, p)}, false};
}

TransitionOutcome search(const ChallengeGraph& c, const Action& a) {
    const bool hit = a.file == c.flag.file && (!c.flag.guard || c.flag.guard == a.param);
    return {Observation{hit ? ObservationKind::FlagFound : ObservationKind::Nothing, {}}, hit};
}

}  // namespace

std::string_view to_string(ObservationKind kind) noexcept {
    switch (kind) {
        case ObservationKind::Revealed: return "revealed";
        case ObservationKind::FlagFound: return "flag_found";
        case ObservationKind::Nothing: return "nothing";
        case ObservationKind::Invalid: return "invalid";
    }
    return "?";
}

ObservationKind observation_kind_from_string(std::string_view name) {
    for (auto k : {ObservationKind::Revealed, ObservationKind::FlagFound, ObservationKind::Nothing,
                   ObservationKind::Invalid})
        if (to_string(k) == name) return k;
    throw Error("unknown observation kind: " + std::string(name));
}

TransitionOutcome transition_l1(const ChallengeGraph& c, const Action& a) {
    require_level(c, Level::L1);
    require_file(c, a);
    if (a.param) throw ContractViolation("parameters are not available at L1");
    switch (a.verb) {
        case Verb::Read: return reveal(c, a.file, LinkKind::Explicit, std::nullopt);
        case Verb::Search: return search(c, a);
        case Verb::Deepread: break;
    }
    throw ContractViolation("deepread is not available at L1");
}

TransitionOutcome transition_l2(const ChallengeGraph& c, const Action& a) {
    require_level(c, Level::L2);
    require_file(c, a);
    if (a.param) throw ContractViolation("parameters are not available at L2");
    switch (a.verb) {
        case Verb::Read: return reveal(c, a.file, LinkKind::Explicit, std::nullopt);
        case Verb::Deepread: return reveal(c, a.file, LinkKind::Implicit, std::nullopt);
        case Verb::Search: return search(c, a);
    }
    throw ContractViolation("unknown verb");
}

TransitionOutcome transition_l3(const ChallengeGraph& c, const Action& a) {
    require_level(c, Level::L3);
    require_file(c, a);
    if (a.param && (a.param->name >= c.n_param_names || a.param->value >= c.n_param_values))
        return {Observation{ObservationKind::Invalid, {}}, false};
    switch (a.verb) {
        case Verb::Read: return reveal(c, a.file, LinkKind::Explicit, a.param);
        case Verb::Deepread: return reveal(c, a.file, LinkKind::Implicit, a.param);
        case Verb::Search: return search(c, a);
    }
    throw ContractViolation("unknown verb");
}

TransitionOutcome transition(const ChallengeGraph& c, const Action& a) {
    switch (c.level) {
        case Level::L1: return transition_l1(c, a);
        case Level::L2: return transition_l2(c, a);
        case Level::L3: return transition_l3(c, a);
    }
    throw ContractViolation("unknown level");
}

}  // namespace awm

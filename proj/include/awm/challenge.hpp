#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace awm {

enum class Level : std::uint8_t { L1 = 1, L2 = 2, L3 = 3 };

enum class LinkKind : std::uint8_t { Explicit, Implicit };

// Index of a file on the simulated webserver. File 0 is the entry page.
using FileId = std::uint32_t;

inline constexpr FileId kEntryFile = 0;

// A single (parameter name, parameter value) pair, both as indices into the
// challenge's finite name/value alphabets.
struct ParamPair {
    std::uint32_t name = 0;
    std::uint32_t value = 0;

    friend auto operator<=>(const ParamPair&, const ParamPair&) = default;
};

// A directed pointer between two files. A guarded link only responds to a
// request carrying exactly `guard`; `hint` is disclosed to whoever sees the
// link revealed.
struct Link {
    FileId src = 0;
    FileId dst = 0;
    LinkKind kind = LinkKind::Explicit;
    std::optional<ParamPair> guard;
    std::optional<ParamPair> hint;

    friend bool operator==(const Link&, const Link&) = default;
};

struct FlagSpec {
    FileId file = 0;
    std::optional<ParamPair> guard;

    friend bool operator==(const FlagSpec&, const FlagSpec&) = default;
};

// The static target website. Immutable once built; share it read-only
// between any number of episode runners.
struct ChallengeGraph {
    Level level = Level::L1;
    std::uint32_t n_files = 0;
    std::uint32_t n_param_names = 0;
    std::uint32_t n_param_values = 0;
    std::vector<Link> links;
    FlagSpec flag;
    std::uint64_t seed = 0;

    friend bool operator==(const ChallengeGraph&, const ChallengeGraph&) = default;
};

// One entry of an out_links() result / an observation.
struct Revealed {
    FileId file = 0;
    std::optional<ParamPair> hint;

    friend auto operator<=>(const Revealed&, const Revealed&) = default;
};

struct Violation {
    std::string field;  // "level", "n_files", "links", "flag", "solvability", ...
    std::size_t index = 0;  // element index within `field` (0 for scalars)
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool contains(std::string_view message) const;
    std::string to_string() const;
};

// Every violated structural/level/solvability invariant, ordered by field
// then element index. Never throws for malformed content.
ValidationReport validate(const ChallengeGraph& challenge);

// Targets of the links leaving `file` with the given kind whose guard is
// absent or equal to `supplied`. Sorted by (file, hint), duplicates removed.
std::vector<Revealed> out_links(const ChallengeGraph& challenge, FileId file, LinkKind kind,
                                std::optional<ParamPair> supplied);

// Fixpoint of everything an agent can learn using only links, hints and
// parameter pairs it has actually been shown.
struct KnowledgeClosure {
    std::vector<bool> files;
    std::vector<ParamPair> params;  // sorted

    bool knows(const ParamPair& p) const;
};

KnowledgeClosure knowledge_closure(const ChallengeGraph& challenge);

// Polynomial solvability check: the flag file is in the closure and its guard,
// if any, was disclosed by some hint on the way.
bool is_solvable(const ChallengeGraph& challenge);

std::string_view to_string(Level level) noexcept;
std::string_view to_string(LinkKind kind) noexcept;

}  // namespace awm

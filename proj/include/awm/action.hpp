#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "awm/challenge.hpp"

namespace awm {

enum class Verb : std::uint8_t { Read, Deepread, Search };

struct Action {
    Verb verb = Verb::Read;
    FileId file = 0;
    std::optional<ParamPair> param;

    friend bool operator==(const Action&, const Action&) = default;
};

using ActionIndex = std::uint64_t;

// Number of concrete actions: L1 -> 2N, L2 -> 3N, L3 -> 3(N + N*M*O).
// M and O are ignored below L3. Throws InvalidConfig for N = 0, for L3 with
// M or O equal to 0, and on 64-bit overflow.
std::uint64_t action_count(Level level, std::uint64_t n, std::uint64_t m = 0, std::uint64_t o = 0);

// Flat canonical enumeration of a level's action set: verb-major
// (Read < Deepread < Search, Deepread absent at L1), then file ascending, then
// the parameterless variant followed by (name, value) pairs in lexicographic
// order.
class ActionSpace {
public:
    ActionSpace(Level level, std::uint32_t n_files, std::uint32_t n_names = 0, std::uint32_t n_values = 0);
    explicit ActionSpace(const ChallengeGraph& challenge);

    Level level() const noexcept { return level_; }
    std::uint32_t n_files() const noexcept { return n_files_; }
    std::uint32_t n_names() const noexcept { return n_names_; }
    std::uint32_t n_values() const noexcept { return n_values_; }
    std::uint64_t size() const noexcept { return size_; }

    std::span<const Verb> verbs() const noexcept;
    std::uint64_t variants_per_file() const noexcept { return per_file_; }

    // Throws ContractViolation for a verb or parameter the level does not
    // allow, or any index out of range.
    ActionIndex index(const Action& action) const;
    Action action(ActionIndex index) const;

    bool allows(const Action& action) const noexcept;

private:
    Level level_;
    std::uint32_t n_files_;
    std::uint32_t n_names_;
    std::uint32_t n_values_;
    std::uint64_t per_file_;
    std::uint64_t size_;
};

inline ActionIndex action_index(const Action& action, Level level, std::uint32_t n, std::uint32_t m = 0,
                                std::uint32_t o = 0) {
    return ActionSpace(level, n, m, o).index(action);
}

inline Action action_from_index(ActionIndex index, Level level, std::uint32_t n, std::uint32_t m = 0,
                                std::uint32_t o = 0) {
    return ActionSpace(level, n, m, o).action(index);
}

std::string to_string(Verb verb);
std::string to_string(const Action& action);

}  // namespace awm

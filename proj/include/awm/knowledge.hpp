#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "awm/action.hpp"
#include "awm/bigint.hpp"
#include "awm/challenge.hpp"

namespace awm {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Agent-side record of an episode: discovered files (the entry file always),
// disclosed parameter pairs, and the canonical indices of every action that
// reached the server. All three sets only grow within an episode.
class KnowledgeState {
public:
    explicit KnowledgeState(const ActionSpace& space);

    bool discovered(FileId file) const { return file < discovered_.size() && discovered_.test(file); }
    bool knows(const ParamPair& p) const;
    bool tried(ActionIndex index) const { return index < tried_.size() && tried_.test(index); }

    // Each returns true if the set grew.
    bool discover(FileId file);
    bool learn(const ParamPair& p);
    bool mark_tried(ActionIndex index);

    const Bitset& discovered_bits() const noexcept { return discovered_; }
    const Bitset& known_bits() const noexcept { return known_; }
    const Bitset& tried_bits() const noexcept { return tried_; }

    std::size_t discovered_count() const { return discovered_.count(); }
    std::vector<FileId> discovered_files() const;
    std::vector<ParamPair> known_params() const;

    friend bool operator==(const KnowledgeState&, const KnowledgeState&) = default;

private:
    std::uint32_t n_values_;
    Bitset discovered_;
    Bitset known_;
    Bitset tried_;
};

// Packs the tried-set: bit i is set iff canonical action i was tried.
BigInt knowledge_index(const KnowledgeState& state);

// Same, after checking the state's dimensions against the level's action space.
BigInt knowledge_index(const KnowledgeState& state, Level level, std::uint32_t n, std::uint32_t m = 0,
                       std::uint32_t o = 0);

// Injective code of (tried, discovered): tried bits, then the discovered
// bits shifted past the action count. Used as the tabular state.
BigInt joint_code(const KnowledgeState& state);

// Fixed-width machine form of joint_code() for hashing.
struct StateKey {
    std::vector<std::uint64_t> words;

    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& key) const noexcept;
};

StateKey state_key(const KnowledgeState& state);
BigInt to_bigint(const StateKey& key);

}  // namespace awm

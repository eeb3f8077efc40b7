#include "awm/knowledge.hpp"

#include <iterator>

#include "awm/errors.hpp"
#include "awm/rng.hpp"

namespace awm {

namespace {

BigInt bits_to_bigint(const Bitset& bits) {
    std::vector<std::uint64_t> blocks;
    boost::to_block_range(bits, std::back_inserter(blocks));
    BigInt out = 0;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        out <<= 64;
        out |= *it;
    }
    return out;
}

}  // namespace

KnowledgeState::KnowledgeState(const ActionSpace& space)
    : n_values_(space.n_values()),
      discovered_(space.n_files()),
      known_(std::size_t{space.n_names()} * space.n_values()),
      tried_(space.size()) {
    discovered_.set(kEntryFile);
}

bool KnowledgeState::knows(const ParamPair& p) const {
    const std::size_t bit = std::size_t{p.name} * n_values_ + p.value;
    return p.value < n_values_ && bit < known_.size() && known_.test(bit);
}

bool KnowledgeState::discover(FileId file) {
    if (file >= discovered_.size()) throw ContractViolation("discover: file out of range");
    if (discovered_.test(file)) return false;
    discovered_.set(file);
    return true;
}

bool KnowledgeState::learn(const ParamPair& p) {
    const std::size_t bit = std::size_t{p.name} * n_values_ + p.value;
    if (p.value >= n_values_ || bit >= known_.size()) throw ContractViolation("learn: parameter pair out of range");
    if (known_.test(bit)) return false;
    known_.set(bit);
    return true;
}

bool KnowledgeState::mark_tried(ActionIndex index) {
    if (index >= tried_.size()) throw ContractViolation("mark_tried: action index out of range");
    if (tried_.test(index)) return false;
    tried_.set(index);
    return true;
}

std::vector<FileId> KnowledgeState::discovered_files() const {
    std::vector<FileId> out;
    for (auto i = discovered_.find_first(); i != Bitset::npos; i = discovered_.find_next(i))
        out.push_back(static_cast<FileId>(i));
    return out;
}

std::vector<ParamPair> KnowledgeState::known_params() const {
    std::vector<ParamPair> out;
    for (auto i = known_.find_first(); i != Bitset::npos; i = known_.find_next(i))
        out.push_back({static_cast<std::uint32_t>(i / n_values_), static_cast<std::uint32_t>(i % n_values_)});
    return out;
}

BigInt knowledge_index(const KnowledgeState& state) { return bits_to_bigint(state.tried_bits()); }

BigInt knowledge_index(const KnowledgeState& state, Level level, std::uint32_t n, std::uint32_t m,
                       std::uint32_t o) {
    const ActionSpace space(level, n, m, o);
    if (state.tried_bits().size() != space.size() || state.discovered_bits().size() != n)
        throw ContractViolation("knowledge_index: state does not match the level's dimensions");
    return knowledge_index(state);
}

BigInt joint_code(const KnowledgeState& state) {
    return bits_to_bigint(state.tried_bits()) |
           (bits_to_bigint(state.discovered_bits()) << state.tried_bits().size());
}

StateKey state_key(const KnowledgeState& state) {
    // Concatenate the two bitsets at bit granularity so the key equals joint_code().
    const Bitset& tried = state.tried_bits();
    const Bitset& disc = state.discovered_bits();
    const std::size_t total = tried.size() + disc.size();
    StateKey key;
    key.words.assign((total + 63) / 64, 0);
    for (auto i = tried.find_first(); i != Bitset::npos; i = tried.find_next(i))
        key.words[i / 64] |= std::uint64_t{1} << (i % 64);
    for (auto i = disc.find_first(); i != Bitset::npos; i = disc.find_next(i)) {
        const std::size_t bit = tried.size() + i;
        key.words[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
    return key;
}

std::size_t StateKeyHash::operator()(const StateKey& key) const noexcept {
    std::uint64_t h = key.words.size();
    for (std::uint64_t w : key.words) h = SplitMix64::mix(h ^ w) + SplitMix64::kGamma;
    return static_cast<std::size_t>(h);
}

BigInt to_bigint(const StateKey& key) {
    BigInt out = 0;
    for (auto it = key.words.rbegin(); it != key.words.rend(); ++it) {
        out <<= 64;
        out |= *it;
    }
    return out;
}

}  // namespace awm

#include "awm/oracle.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <unordered_map>

#include "awm/dynamics.hpp"
#include "awm/errors.hpp"
#include "awm/knowledge.hpp"

namespace awm {

namespace {

struct Node {
    Bitset files;
    Bitset known;
    std::size_t parent = 0;
    Action via;
};

StateKey key_of(const Bitset& files, const Bitset& known) {
    StateKey key;
    boost::to_block_range(files, std::back_inserter(key.words));
    boost::to_block_range(known, std::back_inserter(key.words));
    return key;
}

}  // namespace

std::optional<std::vector<Action>> oracle_solve(const ChallengeGraph& c, std::size_t node_limit, OracleStats* stats) {
    OracleStats local;
    OracleStats& st = stats ? *stats : local;
    st = {};
    if (!is_solvable(c)) return std::nullopt;

    const ActionSpace space(c);
    const std::uint32_t n_values = c.n_param_values;
    const std::size_t n_pairs = std::size_t{c.n_param_names} * n_values;

    std::vector<Node> nodes;
    std::unordered_map<StateKey, std::size_t, StateKeyHash> index;
    Node root{Bitset(c.n_files), Bitset(n_pairs), 0, {}};
    root.files.set(kEntryFile);
    index.emplace(key_of(root.files, root.known), 0);
    nodes.push_back(std::move(root));
    std::deque<std::size_t> frontier{0};

    auto path_to = [&](std::size_t id, const Action& last) {
        std::vector<Action> out{last};
        for (; id != 0; id = nodes[id].parent) out.push_back(nodes[id].via);
        std::reverse(out.begin(), out.end());
        return out;
    };

    while (!frontier.empty()) {
        const std::size_t id = frontier.front();
        frontier.pop_front();
        ++st.expanded;

        // Candidate parameter variants: none, then every disclosed pair.
        std::vector<std::optional<ParamPair>> variants{std::nullopt};
        const Bitset& known = nodes[id].known;
        for (auto b = known.find_first(); b != Bitset::npos; b = known.find_next(b))
            variants.emplace_back(ParamPair{static_cast<std::uint32_t>(b / n_values),
                                            static_cast<std::uint32_t>(b % n_values)});

        for (Verb verb : space.verbs()) {
            for (FileId f = 0; f < c.n_files; ++f) {
                if (!nodes[id].files.test(f)) continue;
                for (const auto& param : variants) {
                    const Action a{verb, f, param};
                    const TransitionOutcome out = transition(c, a);
                    if (out.flag_taken) return path_to(id, a);
                    if (out.observation.kind != ObservationKind::Revealed) continue;

                    Bitset files = nodes[id].files;
                    Bitset learned = nodes[id].known;
                    for (const Revealed& r : out.observation.revealed) {
                        files.set(r.file);
                        if (r.hint) learned.set(std::size_t{r.hint->name} * n_values + r.hint->value);
                    }
                    if (files == nodes[id].files && learned == nodes[id].known) continue;
                    StateKey key = key_of(files, learned);
                    if (index.contains(key)) continue;
                    if (nodes.size() >= node_limit)
                        throw Error("oracle search limit of " + std::to_string(node_limit) + " states exceeded");
                    index.emplace(std::move(key), nodes.size());
                    frontier.push_back(nodes.size());
                    nodes.push_back(Node{std::move(files), std::move(learned), id, a});
                    ++st.generated;
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<ActionIndex> to_indices(const ChallengeGraph& challenge, const std::vector<Action>& actions) {
    const ActionSpace space(challenge);
    std::vector<ActionIndex> out;
    out.reserve(actions.size());
    for (const Action& a : actions) out.push_back(space.index(a));
    return out;
}

}  // namespace awm

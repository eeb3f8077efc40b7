#include "awm/challenge.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace awm {

namespace {

// Field order of validate()'s report.
int field_rank(std::string_view field) {
    static constexpr std::string_view kOrder[] = {"level",  "n_files", "n_param_names",
                                                  "n_param_values", "links", "flag",
                                                  "solvability"};
    for (int i = 0; i < static_cast<int>(std::size(kOrder)); ++i)
        if (kOrder[i] == field) return i;
    return static_cast<int>(std::size(kOrder));
}

std::string pair_string(const ParamPair& p) {
    return "(p" + std::to_string(p.name) + ",v" + std::to_string(p.value) + ")";
}

bool pair_in_bounds(const ChallengeGraph& g, const ParamPair& p) {
    return p.name < g.n_param_names && p.value < g.n_param_values;
}

// Files reachable from `start` following any link regardless of kind or guard.
std::vector<bool> structural_reach(const ChallengeGraph& g, FileId start) {
    std::vector<bool> seen(g.n_files, false);
    std::vector<FileId> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        const FileId f = stack.back();
        stack.pop_back();
        for (const Link& l : g.links) {
            if (l.src == f && l.dst < g.n_files && !seen[l.dst]) {
                seen[l.dst] = true;
                stack.push_back(l.dst);
            }
        }
    }
    return seen;
}

}  // namespace

bool ValidationReport::contains(std::string_view message) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.message == message; });
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const Violation& v : violations) os << v.field << "[" << v.index << "]: " << v.message << '\n';
    return os.str();
}

ValidationReport validate(const ChallengeGraph& g) {
    std::vector<Violation> out;
    auto add = [&](std::string field, std::size_t index, std::string message) {
        out.push_back({std::move(field), index, std::move(message)});
    };

    const int lvl = static_cast<int>(g.level);
    const bool parametric = g.level == Level::L3;
    if (lvl < 1 || lvl > 3) add("level", 0, "level must be 1, 2 or 3");

    if (g.n_files < 2) add("n_files", 0, "at least two files are required");
    if (parametric) {
        if (g.n_param_names < 1) add("n_param_names", 0, "L3 requires M >= 1");
        if (g.n_param_values < 1) add("n_param_values", 0, "L3 requires O >= 1");
    } else {
        if (g.n_param_names != 0) add("n_param_names", 0, "L1/L2 require M = 0");
        if (g.n_param_values != 0) add("n_param_values", 0, "L1/L2 require O = 0");
    }

    const std::string lname = "L" + std::to_string(lvl);
    std::set<std::tuple<FileId, FileId, LinkKind, std::optional<ParamPair>>> seen;
    bool indices_ok = true;
    for (std::size_t i = 0; i < g.links.size(); ++i) {
        const Link& l = g.links[i];
        if (l.src >= g.n_files || l.dst >= g.n_files) {
            add("links", i, "file index out of range");
            indices_ok = false;
        }
        if (l.src == l.dst) add("links", i, "self-link");
        if (g.level == Level::L1 && l.kind == LinkKind::Implicit) add("links", i, "L1 forbids Implicit");
        if (!parametric && l.guard) add("links", i, lname + " forbids guards");
        if (!parametric && l.hint) add("links", i, lname + " forbids hints");
        if (parametric && l.guard && !pair_in_bounds(g, *l.guard)) {
            add("links", i, "guard out of range " + pair_string(*l.guard));
            indices_ok = false;
        }
        if (parametric && l.hint && !pair_in_bounds(g, *l.hint)) {
            add("links", i, "hint out of range " + pair_string(*l.hint));
            indices_ok = false;
        }
        if (!seen.insert({l.src, l.dst, l.kind, l.guard}).second) add("links", i, "duplicate link");
    }

    if (g.flag.file >= g.n_files) {
        add("flag", 0, "flag file out of range");
        indices_ok = false;
    }
    if (g.flag.file == kEntryFile) add("flag", 0, "flag must not be in the entry file");
    if (!parametric && g.flag.guard) add("flag", 0, lname + " forbids a flag guard");
    if (parametric && g.flag.guard && !pair_in_bounds(g, *g.flag.guard)) {
        add("flag", 0, "flag guard out of range " + pair_string(*g.flag.guard));
        indices_ok = false;
    }

    // Hints must point at a guard that can actually be met downstream.
    if (indices_ok && g.n_files > 0) {
        for (std::size_t i = 0; i < g.links.size(); ++i) {
            const Link& l = g.links[i];
            if (!l.hint) continue;
            const std::vector<bool> reach = structural_reach(g, l.dst);
            bool truthful = reach[g.flag.file] && g.flag.guard == l.hint;
            for (const Link& other : g.links)
                truthful = truthful || (reach[other.src] && other.guard == l.hint);
            if (!truthful) add("links", i, "hint " + pair_string(*l.hint) + " matches no downstream guard");
        }
    }

    if (out.empty() && !is_solvable(g)) add("solvability", 0, "unsolvable");

    std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        return std::pair(field_rank(a.field), a.index) < std::pair(field_rank(b.field), b.index);
    });
    return ValidationReport{std::move(out)};
}

std::vector<Revealed> out_links(const ChallengeGraph& g, FileId file, LinkKind kind,
                                std::optional<ParamPair> supplied) {
    std::vector<Revealed> out;
    for (const Link& l : g.links) {
        if (l.src != file || l.kind != kind || l.dst >= g.n_files) continue;
        if (l.guard && l.guard != supplied) continue;
        out.push_back({l.dst, l.hint});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool KnowledgeClosure::knows(const ParamPair& p) const {
    return std::binary_search(params.begin(), params.end(), p);
}

KnowledgeClosure knowledge_closure(const ChallengeGraph& g) {
    KnowledgeClosure k;
    k.files.assign(g.n_files, false);
    if (g.n_files == 0) return k;
    k.files[kEntryFile] = true;
    std::set<ParamPair> known;
    for (bool changed = true; changed;) {
        changed = false;
        for (const Link& l : g.links) {
            if (l.src >= g.n_files || l.dst >= g.n_files || !k.files[l.src]) continue;
            if (l.guard && !known.contains(*l.guard)) continue;
            if (!k.files[l.dst]) {
                k.files[l.dst] = true;
                changed = true;
            }
            if (l.hint && known.insert(*l.hint).second) changed = true;
        }
    }
    k.params.assign(known.begin(), known.end());
    return k;
}

bool is_solvable(const ChallengeGraph& g) {
    if (g.flag.file >= g.n_files) return false;
    const KnowledgeClosure k = knowledge_closure(g);
    return k.files[g.flag.file] && (!g.flag.guard || k.knows(*g.flag.guard));
}

std::string_view to_string(Level level) noexcept {
    switch (level) {
        case Level::L1: return "L1";
        case Level::L2: return "L2";
        case Level::L3: return "L3";
    }
    return "L?";
}

std::string_view to_string(LinkKind kind) noexcept {
    return kind == LinkKind::Explicit ? "explicit" : "implicit";
}

}  // namespace awm

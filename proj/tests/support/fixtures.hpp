#pragma once

#include <optional>
#include <vector>

#include "awm/challenge.hpp"

namespace awm::test {

inline Link explicit_link(FileId src, FileId dst, std::optional<ParamPair> guard = std::nullopt,
                          std::optional<ParamPair> hint = std::nullopt) {
    return Link{src, dst, LinkKind::Explicit, guard, hint};
}

inline Link implicit_link(FileId src, FileId dst, std::optional<ParamPair> guard = std::nullopt,
                          std::optional<ParamPair> hint = std::nullopt) {
    return Link{src, dst, LinkKind::Implicit, guard, hint};
}

// f0 -> f1 -> ... -> f(n-1), flag in the last file.
inline ChallengeGraph chain_l1(std::uint32_t n = 3) {
    ChallengeGraph g;
    g.level = Level::L1;
    g.n_files = n;
    for (FileId f = 0; f + 1 < n; ++f) g.links.push_back(explicit_link(f, f + 1));
    g.flag.file = n - 1;
    return g;
}

// f0 -> f1 explicit, f0 => f2 implicit, flag in f2.
inline ChallengeGraph fork_l2() {
    ChallengeGraph g;
    g.level = Level::L2;
    g.n_files = 3;
    g.links = {explicit_link(0, 1), implicit_link(0, 2)};
    g.flag.file = 2;
    return g;
}

// Mixed explicit/implicit website in the style of the level-2 example: the
// flag file f5 is only reachable through implicit pointers.
//
//   f0 -> f1, f0 -> f2, f1 -> f3, f2 => f4, f3 => f5, f4 -> f5, f1 -> f2
inline ChallengeGraph mixed_l2() {
    ChallengeGraph g;
    g.level = Level::L2;
    g.n_files = 6;
    g.links = {explicit_link(0, 1), explicit_link(0, 2), explicit_link(1, 2), explicit_link(1, 3),
               implicit_link(2, 4), implicit_link(3, 5), explicit_link(4, 5)};
    g.flag.file = 5;
    return g;
}

// L3, M = O = 2: f0 -> f1 discloses (p0,v1); f1 -> f2 is guarded by it and
// discloses (p1,v0), which guards the flag in f2.
inline ChallengeGraph guarded_l3() {
    ChallengeGraph g;
    g.level = Level::L3;
    g.n_files = 3;
    g.n_param_names = 2;
    g.n_param_values = 2;
    g.links = {explicit_link(0, 1, std::nullopt, ParamPair{0, 1}),
               explicit_link(1, 2, ParamPair{0, 1}, ParamPair{1, 0})};
    g.flag = {2, ParamPair{1, 0}};
    return g;
}

}  // namespace awm::test

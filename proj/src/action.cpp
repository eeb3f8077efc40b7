#include "awm/action.hpp"

#include <array>
#include <limits>

#include "awm/errors.hpp"

namespace awm {

namespace {

constexpr std::array<Verb, 2> kVerbsL1{Verb::Read, Verb::Search};
constexpr std::array<Verb, 3> kVerbsL23{Verb::Read, Verb::Deepread, Verb::Search};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        throw InvalidConfig("action count overflows 64 bits");
    return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (b > std::numeric_limits<std::uint64_t>::max() - a) throw InvalidConfig("action count overflows 64 bits");
    return a + b;
}

}  // namespace

std::uint64_t action_count(Level level, std::uint64_t n, std::uint64_t m, std::uint64_t o) {
    if (n == 0) throw InvalidConfig("action_count: N must be >= 1");
    switch (level) {
        case Level::L1: return checked_mul(2, n);
        case Level::L2: return checked_mul(3, n);
        case Level::L3:
            if (m == 0 || o == 0) throw InvalidConfig("action_count: L3 requires M >= 1 and O >= 1");
            return checked_mul(3, checked_add(n, checked_mul(n, checked_mul(m, o))));
    }
    throw InvalidConfig("action_count: unknown level");
}

ActionSpace::ActionSpace(Level level, std::uint32_t n_files, std::uint32_t n_names, std::uint32_t n_values)
    : level_(level),
      n_files_(n_files),
      n_names_(level == Level::L3 ? n_names : 0),
      n_values_(level == Level::L3 ? n_values : 0),
      per_file_(level == Level::L3 ? 1 + std::uint64_t{n_names} * n_values : 1),
      size_(action_count(level, n_files, n_names, n_values)) {}

ActionSpace::ActionSpace(const ChallengeGraph& c)
    : ActionSpace(c.level, c.n_files, c.n_param_names, c.n_param_values) {}

std::span<const Verb> ActionSpace::verbs() const noexcept {
    if (level_ == Level::L1) return kVerbsL1;
    return kVerbsL23;
}

bool ActionSpace::allows(const Action& a) const noexcept {
    if (a.file >= n_files_) return false;
    if (a.verb == Verb::Deepread && level_ == Level::L1) return false;
    if (a.param) {
        if (level_ != Level::L3) return false;
        if (a.param->name >= n_names_ || a.param->value >= n_values_) return false;
    }
    return true;
}

ActionIndex ActionSpace::index(const Action& a) const {
    if (a.verb == Verb::Deepread && level_ == Level::L1)
        throw ContractViolation("deepread is not available at L1");
    if (a.param && level_ != Level::L3)
        throw ContractViolation("parameters are only available at L3");
    if (a.file >= n_files_) throw ContractViolation("file index out of range: " + std::to_string(a.file));
    if (a.param && (a.param->name >= n_names_ || a.param->value >= n_values_))
        throw ContractViolation("parameter pair out of range");

    const auto vs = verbs();
    std::uint64_t verb_pos = 0;
    while (vs[verb_pos] != a.verb) ++verb_pos;
    std::uint64_t variant = 0;
    if (a.param) variant = 1 + std::uint64_t{a.param->name} * n_values_ + a.param->value;
    return (verb_pos * n_files_ + a.file) * per_file_ + variant;
}

Action ActionSpace::action(ActionIndex index) const {
    if (index >= size_) throw ContractViolation("action index out of range: " + std::to_string(index));
    Action a;
    const std::uint64_t variant = index % per_file_;
    const std::uint64_t rest = index / per_file_;
    a.file = static_cast<FileId>(rest % n_files_);
    a.verb = verbs()[rest / n_files_];
    if (variant != 0) {
        a.param = ParamPair{static_cast<std::uint32_t>((variant - 1) / n_values_),
                            static_cast<std::uint32_t>((variant - 1) % n_values_)};
    }
    return a;
}

std::string to_string(Verb verb) {
    switch (verb) {
        case Verb::Read: return "read";
        case Verb::Deepread: return "deepread";
        case Verb::Search: return "search";
    }
    return "?";
}

std::string to_string(const Action& a) {
    std::string s = to_string(a.verb) + "(f" + std::to_string(a.file);
    if (a.param) s += ", p" + std::to_string(a.param->name) + ", v" + std::to_string(a.param->value);
    return s + ")";
}

}  // namespace awm

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "awm/challenge.hpp"
#include "awm/errors.hpp"

namespace awm {

inline constexpr int kFormatVersion = 1;

// Parsed fine but breaks one or more challenge invariants.
class InvalidChallenge : public Error {
public:
    explicit InvalidChallenge(ValidationReport report)
        : Error("invalid challenge:\n" + report.to_string()), report_(std::move(report)) {}

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

// Canonical challenge JSON: sorted keys, no insignificant whitespace, absent
// optionals as null. Equal graphs always give equal bytes.
std::string serialize(const ChallengeGraph& challenge);

// Strict schema check (exact key sets, types, enum spellings). Throws
// SchemaError naming the field. Does not run validate().
ChallengeGraph parse_challenge(std::string_view json_text);

// Reads, parses and validates a challenge file. Throws SchemaError or
// InvalidChallenge.
ChallengeGraph regenerate_from_file(const std::filesystem::path& path);

// Writes serialize(challenge) plus a trailing newline.
void write_challenge(const std::filesystem::path& path, const ChallengeGraph& challenge);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace awm

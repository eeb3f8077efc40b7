#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace awm {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A challenge/log/policy document does not match its schema.
// `field()` names the offending JSON path, e.g. "links[3].kind".
class SchemaError : public Error {
public:
    SchemaError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Configuration values outside their documented domain.
class InvalidConfig : public Error {
public:
    using Error::Error;
};

// The caller broke an operation's precondition (e.g. stepping a finished episode).
class ContractViolation : public Error {
public:
    using Error::Error;
};

class GenerationError : public Error {
public:
    GenerationError(std::size_t retries, const std::string& what)
        : Error(what + " (after " + std::to_string(retries) + " retries)"), retries_(retries) {}

    std::size_t retries() const noexcept { return retries_; }

private:
    std::size_t retries_;
};

}  // namespace awm

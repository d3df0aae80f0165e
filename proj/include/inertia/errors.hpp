#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inertia {

/// Malformed graph encoding. `position` is a byte offset (graph6) or a
/// 1-based line number (edge list); `unit` says which.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position, const char* unit)
        : std::runtime_error(what + " at " + unit + " " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Violated precondition on an argument (non-symmetric matrix, bad vertex, ...).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input is valid but exceeds what the built-in routines handle.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The bound's hypothesis does not hold for this graph (not k-partially
/// walk-regular). Reported as "n/a" by the CLI.
class InapplicableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No admissible polynomial gives a defined ratio (e.g. all eigenvalues zero).
class UndefinedBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace inertia

#pragma once

#include <stdexcept>
#include <string>

namespace rep11 {

/// Bad user input: malformed files, unknown vertices, violated preconditions.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured budget or state cap was exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal invariant failed. Indicates a bug, not bad input.
struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace rep11

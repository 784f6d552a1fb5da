#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stn {

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An enumeration would exceed its configured size cap.
class CapExceededError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Internal consistency check failed; always a bug, never user error.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace stn

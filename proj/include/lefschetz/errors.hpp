#ifndef LEFSCHETZ_ERRORS_HPP
#define LEFSCHETZ_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace lefschetz {

/// Input violates an operation's precondition (wrong degree, bad index, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The ideal has a common projective zero where an artinian ideal is required.
class NotArtinianError : public std::runtime_error {
public:
    NotArtinianError() : std::runtime_error("ideal is not artinian") {}
};

/// The convex hull of a point set is not full-dimensional.
class DegenerateHullError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check between two independent computations failed.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Text input could not be parsed. `position` is a 0-based column when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message), detail_(message) {}
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at column " + std::to_string(position + 1)),
          detail_(message),
          position_(position)
    {
    }
    /// Message without the column suffix.
    const std::string& detail() const noexcept { return detail_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    std::string detail_;
    std::optional<std::size_t> position_;
};

}  // namespace lefschetz

#endif  // LEFSCHETZ_ERRORS_HPP

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wlb {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data. Carries the offending source (file or directory)
/// and, when known, the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::string source, std::size_t line, const std::string& message)
        : Error(source + ":" + std::to_string(line) + ": " + message),
          source_(std::move(source)),
          line_(line) {}

    ParseError(std::string source, const std::string& message)
        : Error(source + ": " + message), source_(std::move(source)), line_(0) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

/// A computation whose documented cost limit is exceeded, or a generator
/// spec that cannot be realized.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Two inputs that must have equal size do not.
class SizeMismatchError : public Error {
public:
    using Error::Error;
};

/// A structural guarantee that should always hold was observed broken.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// An operation requiring labels was given an unlabeled sample.
class MissingLabelsError : public Error {
public:
    using Error::Error;
};

/// Arguments or data violating a documented precondition.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace wlb

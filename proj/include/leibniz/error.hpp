#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace leibniz {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. Carries a 1-based line number for file sources.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::optional<std::size_t> line = std::nullopt)
        : Error(line ? "line " + std::to_string(*line) + ": " + what : what), line_(line) {}

    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    std::optional<std::size_t> line_;
};

/// Invalid field specification, or operands living in different fields.
class FieldError : public Error {
public:
    using Error::Error;
};

/// Division by zero, dimension mismatch, index out of range.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Unknown catalog id or invalid parameter assignment.
class CatalogError : public Error {
public:
    using Error::Error;
};

/// A value that was required to satisfy a defining identity does not.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace leibniz

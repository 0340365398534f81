#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace morselab {

enum class ErrorKind {
    invalid_input,
    precondition,
    not_a_face,
    parse,
    io,
    internal,
};

const char* to_string(ErrorKind kind);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string hint = {})
        : std::runtime_error(message), kind_(kind), hint_(std::move(hint)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& hint() const noexcept { return hint_; }

private:
    ErrorKind kind_;
    std::string hint_;
};

/// Raised by readers; carries the 1-based line number of the offending input.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised when a proposed matching is not an acyclic matching on the Hasse diagram.
/// For cycles, `witness` lists the cells of a closed V-path in traversal order.
class MatchingError : public Error {
public:
    MatchingError(const std::string& message, std::vector<int> witness = {})
        : Error(ErrorKind::invalid_input, message), witness_(std::move(witness)) {}

    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::vector<int> witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message, std::string hint = {})
{
    throw Error(kind, message, std::move(hint));
}

inline void require(bool condition, ErrorKind kind, const std::string& message)
{
    if (!condition) fail(kind, message);
}

}  // namespace morselab

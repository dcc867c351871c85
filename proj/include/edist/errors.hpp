#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edist {

/// Raised by operations whose contract requires a language with at least two
/// words (distance of a language is undefined otherwise).
class TwoWordsRequiredError : public std::runtime_error {
public:
    TwoWordsRequiredError() : std::runtime_error("language must contain at least two words") {}
};

/// Raised by the text-format reader; carries the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised when a cooperative deadline expires inside an algorithm.
class TimeoutError : public std::runtime_error {
public:
    TimeoutError() : std::runtime_error("computation exceeded the configured timeout") {}
};

}  // namespace edist

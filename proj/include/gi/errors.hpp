#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gi {

// Invalid caller input: malformed instances, out-of-range indices, bad file
// contents.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure; carries the 1-based line number of the offending input.
struct ParseError : InputError {
    ParseError(std::size_t line_no, const std::string& what)
        : InputError("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};

// An explicitly requested solver strategy does not apply to the instance.
struct StrategyError : std::runtime_error {
    explicit StrategyError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive search would exceed the configured size limit.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gi

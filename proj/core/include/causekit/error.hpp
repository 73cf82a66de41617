#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace causekit {

/// Base class for domain errors: malformed input, violated preconditions,
/// tuples that are not part of the instance.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Raised when an enumeration would exceed its configured budget. Results are
/// never silently truncated.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

} // namespace causekit

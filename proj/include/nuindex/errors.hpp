#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nuindex {

/// Base class for every input/validation error raised by this library.
/// Internal logic errors are not wrapped; they surface as standard exceptions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NegativeCitationError : public Error {
public:
    using Error::Error;
};

class NonIntegerCitationError : public Error {
public:
    using Error::Error;
};

class InvalidThresholdError : public Error {
public:
    using Error::Error;
};

class InvalidAlphaError : public Error {
public:
    using Error::Error;
};

class UnknownIndexNameError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Malformed input file content. Carries the 1-based line (0 = whole file)
/// and, when known, the 1-based field/column where parsing failed.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column = 0)
        : Error(format(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        std::string out;
        if (line > 0) {
            out += "line " + std::to_string(line);
            if (column > 0) out += ", field " + std::to_string(column);
            out += ": ";
        }
        return out + message;
    }

    std::size_t line_;
    std::size_t column_;
};

class DuplicateAuthorError : public ParseError {
public:
    DuplicateAuthorError(const std::string& author_id, std::size_t line, std::size_t first_line)
        : ParseError("duplicate author id '" + author_id + "' (first seen at line " +
                         std::to_string(first_line) + ")",
                     line) {}
};

}  // namespace nuindex

#ifndef MONORES_ERRORS_HPP
#define MONORES_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monores {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two exponent vectors (or a vector and an ideal) disagree on the variable count.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// Input outside the mathematical domain of an operation (unit ideal, bad exponent, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of a construction does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its configured size limit.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::size_t limit)
        : Error(what + " exceeds cap of " + std::to_string(limit)), limit_(limit) {}
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace monores

#endif  // MONORES_ERRORS_HPP

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xi_audit {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

class PoleAtOne : public Error {
public:
    PoleAtOne() : Error("zeta: pole at s = 1") {}
};

class PoleAtNonPositiveInteger : public Error {
public:
    explicit PoleAtNonPositiveInteger(long n)
        : Error("gamma: pole at non-positive integer " + std::to_string(n)) {}
};

class TailBoundViolated : public Error {
public:
    using Error::Error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A data type invariant does not hold for the supplied values.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class OrderError : public Error {
public:
    OrderError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DegenerateT2 : public Error {
public:
    using Error::Error;
};

class FormMismatch : public Error {
public:
    using Error::Error;
};

class PremiseFailed : public Error {
public:
    using Error::Error;
};

class CaseExhausted : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace xi_audit

#pragma once

#include <stdexcept>
#include <string>

namespace sigma {

// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

class RadicandMismatch : public Error {
public:
    using Error::Error;
};

class PoleEvaluation : public Error {
public:
    using Error::Error;
};

class ImproperRational : public Error {
public:
    using Error::Error;
};

class ImproperResult : public Error {
public:
    using Error::Error;
};

// Inputs that are well formed but outside what the solver can handle.
// The CLI maps this family to exit code 2.
class CapabilityError : public Error {
public:
    using Error::Error;
};

class UnsupportedFactorization : public CapabilityError {
public:
    using CapabilityError::CapabilityError;
};

class DegreeLimitExceeded : public CapabilityError {
public:
    using CapabilityError::CapabilityError;
};

class ResonantForcing : public CapabilityError {
public:
    using CapabilityError::CapabilityError;
};

// Internal cross-check mismatch. Always a bug.
class VerificationFailed : public Error {
public:
    using Error::Error;
};

class DivergenceGuard : public Error {
public:
    using Error::Error;
};

class CheckFailed : public Error {
public:
    using Error::Error;
};

class ZeroDenominator : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

class SemanticError : public Error {
public:
    using Error::Error;
};

} // namespace sigma

#pragma once

#include <stdexcept>
#include <string>

namespace mhlab {

// Base class for all library errors. Subclasses mirror the C API status codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing incompatible structures (variable sets, dimensions, coefficient modes).
class StructuralError : public Error {
public:
    using Error::Error;
};

// A parameter specialization hits an excluded value (e.g. the condition on c).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Input outside an operation's mathematical domain (pole on a hyperplane,
// non-symmetric polynomial passed to a symmetric-only operator, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Division by zero and friends.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

// A verified property of a constructed object failed to hold.
class VerificationError : public Error {
public:
    using Error::Error;
};

// Bad command-line usage.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace mhlab

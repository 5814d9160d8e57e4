#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hposet {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad dimensions, labels, relations, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Text input that failed to parse; carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Relation list whose closure is not antisymmetric.
class NotPartialOrderError : public InputError {
public:
    using InputError::InputError;
};

/// Operation that is only defined for hierarchical posets was given another poset.
class NotHierarchicalError : public InputError {
public:
    using InputError::InputError;
};

/// Mathematically undefined request (inverse of zero, minimum distance of {0}, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class ZeroCodeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The requested field is valid but the operation does not apply to it.
class UnsupportedFieldError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An exhaustive computation would exceed its size guard.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace hposet

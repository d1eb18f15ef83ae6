#pragma once

#include <stdexcept>
#include <string>

namespace bcdcat {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid user-supplied parameters (series bounds, malformed labels, ...).
/// Maps to the usage-error exit code in the CLI.
struct InvalidParameterError : Error {
    using Error::Error;
};

/// A computation left its domain (vanishing denominator, cell outside a
/// diagram, operand order mismatch, ...).
struct DomainError : Error {
    using Error::Error;
};

struct OrderMismatchError : DomainError {
    using DomainError::DomainError;
};

struct DivisionByZeroError : DomainError {
    using DomainError::DomainError;
};

struct NotInSubfieldError : DomainError {
    using DomainError::DomainError;
};

/// A mathematical identity that must hold failed.  These are never caught
/// and repaired internally; they indicate a real fault and map to the
/// dedicated consistency exit code in the CLI.
struct ConsistencyError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace bcdcat

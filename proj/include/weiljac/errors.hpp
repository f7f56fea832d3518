#pragma once

#include <stdexcept>
#include <string>

namespace weiljac {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid mathematical input (singular matrix, division by zero, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A Jacobi index (M, B) or block split that violates its integrality conditions.
class IndexError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Two coefficient sources that should agree do not.
class MismatchError : public DomainError {
public:
    using DomainError::DomainError;
};

/// No primitive vector of the requested norm exists.
class NotRepresentableError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A consistency check that can only fail through a library bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace weiljac

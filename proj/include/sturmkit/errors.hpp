#pragma once

#include <stdexcept>
#include <string>

namespace sturmkit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument, precondition violation, or unusable input.
/// CLI maps these to exit code 2.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two quadratic numbers with distinct radicands were combined.
class FieldMismatchError : public DomainError {
public:
    using DomainError::DomainError;
};

class DivisionByZeroError : public DomainError {
public:
    using DomainError::DomainError;
};

class ParseError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A configured step or depth bound was exceeded.
class ResourceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Continued fraction does not match a recognized invariant-slope shape.
class ClassificationError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Morphism has no letter generating an infinite word.
class NotProlongableError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Conjugating word is undefined (image of 0 does not end in 0).
class ConjugationUndefinedError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Morphism is not an element of the requested generator monoid.
class NotInMonoidError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Fixed-point equation has no admissible solution.
class NoFixedPointError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Fixed-point equation degenerates to a line of solutions.
class AmbiguousRhoError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Search exhausted its depth bound.  CLI maps this to exit code 3.
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// A guaranteed internal consistency condition failed.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace sturmkit

#pragma once

#include <stdexcept>
#include <string>

namespace halphen {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected input: violated precondition or out-of-range parameter.
// The CLI maps this family to exit code 2.
class DomainError : public Error {
public:
    using Error::Error;
};

class NegativeValue : public DomainError {
public:
    using DomainError::DomainError;
};

class DuplicateIndex : public DomainError {
public:
    using DomainError::DomainError;
};

class TotalMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class NegativeInput : public DomainError {
public:
    using DomainError::DomainError;
};

// Parameter regime the piecewise construction does not cover.
class InconsistentParams : public DomainError {
public:
    using DomainError::DomainError;
};

// Enumeration request above the configured desk-scale cap.
class CapExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

// A constructed object failed its own validation. CLI exit code 3.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

// An expression that must combine to an integer did not.
class NonIntegerResult : public InternalInconsistency {
public:
    using InternalInconsistency::InternalInconsistency;
};

} // namespace halphen

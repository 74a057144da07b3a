#pragma once

#include <stdexcept>
#include <string>

namespace circulant {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A square-value substitution or half-exponent met an odd exponent.
class ParityError : public Error {
public:
    using Error::Error;
};

/// Two routes that must agree did not, or an exact division left a remainder.
/// Always indicates a bug, never bad input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// No formula (or oracle) covers the requested order/class combination.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// The request is supported in principle but exceeds the configured work bound.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace circulant

#pragma once

#include <stdexcept>
#include <string>

namespace sqdisc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument is outside the operation's domain (zero where a unit is
/// required, unknown N, malformed input).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation hit a zero of a denominator. The message carries the label
/// "cusp candidate".
class PoleError : public DomainError {
public:
    explicit PoleError(const std::string& where)
        : DomainError("cusp candidate: " + where) {}
};

/// A model with vanishing discriminant was passed where an elliptic curve is
/// required.
class SingularModelError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Integer factorization gave up on a cofactor.
class FactorizationError : public Error {
public:
    using Error::Error;
};

/// Table or coefficient data failed to load or failed its self-check.
class DataError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (curves, rationals, expressions).
class ParseError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace sqdisc

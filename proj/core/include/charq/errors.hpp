#pragma once

#include <stdexcept>
#include <string>

namespace charq {

// Base class for everything this library throws on bad input or on a
// contract violation.  Callers that only want "did it work" can catch this.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two operands disagree on the number of t-variables.
struct VarMismatchError : Error {
    explicit VarMismatchError(const std::string& msg) : Error(msg) {}
};

// Exact polynomial division hit a non-cancelling remainder.
struct NotDivisibleError : Error {
    explicit NotDivisibleError(const std::string& msg) : Error(msg) {}
};

// An operation that needs a symmetric polynomial got a non-symmetric one.
struct NonSymmetricError : Error {
    explicit NonSymmetricError(const std::string& msg) : Error(msg) {}
};

// A denominator factor with q-power 0 cannot be expanded as a power series.
struct FactorNotExpandableError : Error {
    explicit FactorNotExpandableError(const std::string& msg) : Error(msg) {}
};

// The t -> t*q substitution produced a negative q-exponent.
struct NegativeQPowerError : Error {
    explicit NegativeQPowerError(const std::string& msg) : Error(msg) {}
};

// A series prefix is too short for the requested reconstruction.
struct InsufficientPrefixError : Error {
    explicit InsufficientPrefixError(const std::string& msg) : Error(msg) {}
};

// A numeration parameter beta must lie strictly between 0 and 1.
struct BetaOutOfRangeError : Error {
    explicit BetaOutOfRangeError(const std::string& msg) : Error(msg) {}
};

// The brute-force oracle only handles the sizes it was built for.
struct UnsupportedSizeError : Error {
    explicit UnsupportedSizeError(const std::string& msg) : Error(msg) {}
};

// Malformed JSON input or a value outside the documented schema.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

}  // namespace charq

#pragma once

#include <stdexcept>
#include <string>

namespace finv {

/** Base class of every error thrown by the library. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input: bad weight parity, level/name mismatch,
/// index out of range, unparsable fraction, ...
struct InvalidInputError : Error {
    using Error::Error;
};

/// A q-expansion is provably not in the requested space of modular forms.
struct NotAModularFormError : Error {
    using Error::Error;
};

/// The working precision cannot pin down a unique exact answer
/// (underdetermined linear solve).
struct InsufficientPrecisionError : Error {
    using Error::Error;
};

/// A boolean/order verdict changed when the precision was doubled.  Raised
/// instead of returning a possibly wrong answer.
struct PrecisionUnstableError : Error {
    using Error::Error;
};

/// The operation is undefined over the coefficient domain in use
/// (e.g. N-integrality over the quadratic extension).
struct UnsupportedDomainError : Error {
    using Error::Error;
};

/// Truncation degree beyond the normalized data built into the library.
struct UnsupportedDegreeError : Error {
    using Error::Error;
};

/// Input describes the degenerate zero-dimensional case that the transfer
/// formula deliberately does not cover.
struct OutOfScopeError : Error {
    using Error::Error;
};

}  // namespace finv

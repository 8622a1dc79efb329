#pragma once

#include <stdexcept>
#include <string>

namespace fracq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A derivative, evaluation or operator precondition does not hold.
struct DomainError : Error {
    using Error::Error;
};

/// Binary operation on fields living on different cubes.
struct CubeMismatch : Error {
    using Error::Error;
};

/// Rational arithmetic left the int64 range.
struct OverflowError : Error {
    using Error::Error;
};

/// omega = 0 or kappa = 0 where the phi/psi inversion needs them.
struct SingularMedium : Error {
    using Error::Error;
};

/// Physical constants outside their admissible range (e.g. the Lame cone).
struct ParameterError : Error {
    using Error::Error;
};

/// Missing or malformed field slots for a system.
struct ShapeError : Error {
    using Error::Error;
};

/// Unreadable or malformed input file; the message starts with "path:line:".
struct InputError : Error {
    using Error::Error;
};

}  // namespace fracq

#pragma once

#include <stdexcept>
#include <string>

namespace semitree {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two scalars (or a matrix and a vector) belong to different algebra instances.
struct AlgebraMismatch : Error {
    using Error::Error;
};

/// A multiplicative inverse was requested in an algebra that has none.
struct NotASemifield : Error {
    using Error::Error;
};

/// inv() was called on the additive identity.
struct ZeroInverse : Error {
    using Error::Error;
};

/// A value violates the carrier invariants of its algebra.
struct InvalidScalar : Error {
    using Error::Error;
};

/// An algebra descriptor violates its construction rules.
struct InvalidAlgebra : Error {
    using Error::Error;
};

/// Matrix/vector sizes do not agree.
struct DimensionMismatch : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

/// An exhaustive-enumeration routine was asked for more states than its cap allows.
struct CapExceeded : Error {
    using Error::Error;
};

/// The input matrix fails a stated algorithm precondition.
struct PreconditionViolated : Error {
    using Error::Error;
};

/// A guaranteed internal invariant failed at run time (e.g. a pivot sum
/// underflowed to zero in floating point).
struct InternalInvariantViolated : Error {
    using Error::Error;
};

/// A matrix file or scalar encoding could not be decoded.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace semitree

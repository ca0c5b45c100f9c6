#pragma once

#include <stdexcept>
#include <string>

namespace krphase {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The mass parameter sits on (or numerically too close to) the closing set
/// {-k, -k+2, ..., k}; spectrally flattened quantities are undefined there.
struct GapClosedError : Error {
    using Error::Error;
};

/// phi_tilde vanished at the requested point (only possible at a closing mass).
struct ZeroVectorError : Error {
    using Error::Error;
};

/// Mass outside (-d, d); the interval index is not defined.
struct OutOfRangeError : Error {
    using Error::Error;
};

/// Matrix dimensions do not match the operation's contract.
struct DimensionError : Error {
    using Error::Error;
};

/// The candidate matrix failed a detector precondition (message names which).
struct DetectorPreconditionError : Error {
    using Error::Error;
};

/// Grading failed to split the representation into the expected two blocks.
struct BlockExtractionError : Error {
    using Error::Error;
};

} // namespace krphase

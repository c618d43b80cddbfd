#pragma once

#include <stdexcept>
#include <string>

namespace eprb {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration or arguments (unknown preset, conflicting sources, ...).
struct UsageError : Error {
    using Error::Error;
};

// Domain/validation failures on otherwise well-formed inputs.
struct ValidationError : Error {
    using Error::Error;
};

// A data set has zero pairs (or would, after truncation).
struct EmptyDataSet : ValidationError {
    using ValidationError::ValidationError;
};

// An outcome value outside {+1, -1}.
struct BadOutcome : ValidationError {
    using ValidationError::ValidationError;
};

// Generator coefficient with |c| > 1.
struct CoefficientOutOfRange : ValidationError {
    using ValidationError::ValidationError;
};

// Exhaustive search requested for a data set too large to enumerate.
struct TooLarge : ValidationError {
    using ValidationError::ValidationError;
};

// Correlations and quadruple result were computed from different data.
struct MismatchedProvenance : ValidationError {
    using ValidationError::ValidationError;
};

// Input file could not be parsed; `line` is 1-based.
struct ParseError : Error {
    ParseError(const std::string& what, long line_number)
        : Error(what), line(line_number) {}
    long line;
};

// Simplex failed to terminate within the pivot cap.
struct SolverStall : Error {
    using Error::Error;
};

// Filesystem read/write failure.
struct IoError : Error {
    using Error::Error;
};

}  // namespace eprb

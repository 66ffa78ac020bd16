#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msa {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape mismatch between operands (non-square input, incompatible products, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

// An argument violates a documented precondition (non-finite entries,
// out-of-range hyperparameter, malformed value, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Input is rank deficient where full rank is required.
class RankError : public Error {
public:
    using Error::Error;
};

// The requested minor subspace is not unique: the eigengap at the subspace
// boundary is numerically zero.
class DegenerateGapError : public Error {
public:
    using Error::Error;
};

// A matrix that must be positive definite is indefinite or too ill-conditioned.
// Carries the smallest-eigenvalue estimate that triggered the failure.
class ConditioningError : public Error {
public:
    ConditioningError(const std::string& what, double smallest_eigenvalue)
        : Error(what + " (smallest eigenvalue " + std::to_string(smallest_eigenvalue) + ")"),
          smallest_eigenvalue_(smallest_eigenvalue) {}

    double smallest_eigenvalue() const noexcept { return smallest_eigenvalue_; }

private:
    double smallest_eigenvalue_;
};

// An iteration failed to converge within its budget. Carries the iteration
// count and the last iterate's scalar summary (eigenvalue estimate, relative
// change, ...).
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::size_t iterations, double last_estimate)
        : Error(what + " after " + std::to_string(iterations) + " iterations"),
          iterations_(iterations),
          last_estimate_(last_estimate) {}

    std::size_t iterations() const noexcept { return iterations_; }
    double last_estimate() const noexcept { return last_estimate_; }

private:
    std::size_t iterations_;
    double last_estimate_;
};

// A learner's weights became non-finite or exceeded the divergence bound.
// The run is aborted and its trace flagged; this is an expected outcome for
// some algorithms, not a bug.
class NumericalBlowupError : public Error {
public:
    NumericalBlowupError(const std::string& what, std::size_t sample_index)
        : Error(what + " at sample " + std::to_string(sample_index)),
          sample_index_(sample_index) {}

    std::size_t sample_index() const noexcept { return sample_index_; }

private:
    std::size_t sample_index_;
};

// Config or file parsing failure; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Filesystem failure; message includes the offending path.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace msa

#pragma once

#include <stdexcept>
#include <string>

namespace kuranet {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates a precondition.
struct InvalidParameterError : Error {
    using Error::Error;
};

/// A node with degree zero makes the per-degree coupling K/k_i undefined.
struct DegenerateDegreeError : InvalidParameterError {
    int node;
    DegenerateDegreeError(const std::string& what, int node_)
        : InvalidParameterError(what), node(node_) {}
};

/// Rejection sampling gave up before producing an accepted sample.
struct RejectionExhaustedError : Error {
    int attempts;
    RejectionExhaustedError(const std::string& what, int attempts_)
        : Error(what), attempts(attempts_) {}
};

/// The integrator produced a non-finite or absurdly large state.
struct NumericalBlowupError : Error {
    long step;
    NumericalBlowupError(const std::string& what, long step_)
        : Error(what), step(step_) {}
};

/// One or more sweep tasks failed; key identifies the first offender.
struct IncompleteSweepError : Error {
    std::string key;
    IncompleteSweepError(const std::string& what, std::string key_)
        : Error(what), key(std::move(key_)) {}
};

/// A result table is missing cells required by an estimator.
struct IncompleteTableError : Error {
    using Error::Error;
};

/// No grid point falls inside the transition window.
struct NoTransitionError : Error {
    using Error::Error;
};

/// A CSV file does not match the expected schema.
struct CsvFormatError : Error {
    using Error::Error;
};

}  // namespace kuranet

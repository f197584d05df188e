#pragma once

#include <stdexcept>
#include <string>

namespace coherence {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input matrix is not Hermitian within tolerance.
struct NotHermitianError : Error {
  using Error::Error;
};

// Eigensolver sweep budget exhausted without reaching the convergence threshold.
struct NoConvergenceError : Error {
  using Error::Error;
};

// Scalar input outside its mathematical domain.
struct DomainError : Error {
  using Error::Error;
};

// Trace differs from 1 beyond tolerance.
struct BadTraceError : Error {
  using Error::Error;
};

// Matrix has an eigenvalue below the positive-semidefinite slack.
struct NotPositiveError : Error {
  using Error::Error;
};

// Wrong dimension for the requested operation.
struct DimensionError : Error {
  using Error::Error;
};

// Two inputs that must share a dimension do not.
struct DimensionMismatchError : Error {
  using Error::Error;
};

// State expected to be diagonal has off-diagonal weight.
struct NotIncoherentError : Error {
  using Error::Error;
};

// Amplitude or Kraus weights do not satisfy the required normalization.
struct NormalizationError : Error {
  using Error::Error;
};

// Lift coefficient |alpha| is 0 or 1, which collapses the construction.
struct DegenerateLiftError : Error {
  using Error::Error;
};

// Requested quantity is not defined for this input (e.g. formation on mixed d >= 3).
struct UnsupportedInputError : Error {
  using Error::Error;
};

// Kraus set fails the incoherent-channel requirements.
struct InvalidChannelError : Error {
  using Error::Error;
};

// Malformed state file or CSV document.
struct FileFormatError : Error {
  using Error::Error;
};

}  // namespace coherence

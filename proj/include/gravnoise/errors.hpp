#pragma once

#include <stdexcept>
#include <string>

namespace gravnoise {

// Library-wide exception taxonomy.  The command-line front end maps these
// classes onto process exit codes, so throw sites should pick the class that
// names the failure mode instead of a bare std::runtime_error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid spacetime dimension (d < 2, or outside an operation's domain).
class DimensionError : public Error {
public:
    using Error::Error;
};

// A projector-based operation was fed a momentum with vanishing invariant
// k^2.  Lightcone physics is carried by distributional terms, never by
// pointwise projector evaluation, so this is always a caller error.
class NullMomentumError : public Error {
public:
    using Error::Error;
};

// Channel coefficients requested where a channel eigenvalue is singular
// (the trace-channel eigenvalue diverges at d = 2).
class SingularChannelError : public Error {
public:
    using Error::Error;
};

// Spectral-density kind mismatch (e.g. symmetrizing a commutator density).
class KindError : public Error {
public:
    using Error::Error;
};

// Numerical failures; the CLI reports these with a dedicated exit code.
class NumericalError : public Error {
public:
    using Error::Error;
};

// Quadrature failed to reach the requested tolerance.
class QuadratureError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// An effective-coupling denominator vanished.  The library's validity domain
// is far below the scale where this happens, so it is reported, never
// regularized.
class ResonanceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Configuration / usage problems (CLI exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Filesystem problems (CLI exit code 3).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace gravnoise

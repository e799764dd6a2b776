#pragma once

#include <stdexcept>
#include <string>

namespace whichpath {

/// Base of every error raised by the library. Each subclass names one failure
/// class so callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid construction parameters (empty particle list, bad grid, bad spec).
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// Operands defined on different grids or register sizes.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Zero-norm state handed to normalize().
class DegenerateStateError : public Error {
public:
    using Error::Error;
};

/// Dense storage request beyond a hard cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Wavefunction reaches the edge of its periodic grid.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Momentum content reaches the Nyquist edge of the grid.
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Fewer than two fringe maxima inside the envelope region; visibility undefined.
class FringeResolutionError : public Error {
public:
    using Error::Error;
};

/// Spatial branches are not orthogonal enough to serve as a two-level basis.
class BasisValidityError : public Error {
public:
    using Error::Error;
};

/// Internal arithmetic produced something no physical state can (a bug signal).
class NumericalConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace whichpath

#pragma once

#include <stdexcept>
#include <string>

namespace qfc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incompatible or non-square matrix dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Invalid argument value (out-of-range index, bad sampling period, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Rank-deficient input where full rank is required.
class RankError : public Error {
public:
    using Error::Error;
};

/// Iterative solver failed to converge.
class SolverError : public Error {
public:
    using Error::Error;
};

/// (C, A_d) pair is not observable.
class ObservabilityError : public Error {
public:
    using Error::Error;
};

/// Problem too ill-conditioned to solve in double precision.
class ConditioningError : public Error {
public:
    using Error::Error;
};

/// Requested decay rate is not achievable (rho <= spectral radius).
class InfeasibleRateError : public Error {
public:
    using Error::Error;
};

/// Unknown catalog entry.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Malformed configuration or plant definition file.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A value fell outside its quantizer hypercube.
class QuantizerOverflowError : public Error {
public:
    QuantizerOverflowError(const std::string& what, int axis, double excess)
        : Error(what), axis(axis), excess(excess) {}
    int axis;       ///< offending coordinate
    double excess;  ///< |v - center| - half_width on that coordinate
};

}  // namespace qfc

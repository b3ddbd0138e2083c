#pragma once

#include <stdexcept>

namespace mz {

/// Base type for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two vectors that must share a length do not.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An argument violates a documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The requested total cannot be reached within the coordinate bounds.
class InfeasibleSetError : public Error {
public:
    using Error::Error;
};

/// A degree sequence fails the Erdos-Gallai characterization.
class NotGraphicalError : public Error {
public:
    using Error::Error;
};

/// A degree sequence is graphical but outside the pendant class handled here.
class OutOfClassError : public Error {
public:
    using Error::Error;
};

/// Integerization was requested for a set with non-integer data.
class NotIntegerizableError : public Error {
public:
    using Error::Error;
};

/// An exhaustive routine was asked to run beyond its size limits.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// The requested combination has no known closed form.
class UnsupportedCaseError : public Error {
public:
    using Error::Error;
};

/// Internal cross-checks disagreed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace mz

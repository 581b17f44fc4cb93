#pragma once

#include <stdexcept>
#include <string>

namespace mixoracle {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A callback produced a NaN/Inf value or vector.
struct NumericalFailure : Error {
    using Error::Error;
};

struct InvalidDimension : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

/// Query point has a nonpositive slack for some polytope row.
struct NotInterior : Error {
    using Error::Error;
};

/// Newton recentring could not keep the iterate interior.
struct CenteringFailure : Error {
    using Error::Error;
};

/// Iteration budget exhausted before the requested work completed.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// FGM line search kept doubling L past the cap; the oracle is
/// inconsistent with the declared constants.
struct LineSearchDiverged : Error {
    using Error::Error;
};

/// Problem generator was given an inconsistent knob set.
struct InvalidSpec : Error {
    using Error::Error;
};

}  // namespace mixoracle

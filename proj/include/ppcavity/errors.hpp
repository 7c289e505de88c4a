#pragma once

#include <stdexcept>
#include <string>

namespace ppcavity {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid physical or mathematical input (negative decay rate, zero drive
// where a nonzero one is required, vanishing denominator, ...).
struct DomainError : Error {
    using Error::Error;
};

// Grid too short for the requested operation.
struct GridError : Error {
    using Error::Error;
};

// Leading coefficient of a polynomial is zero where a full-degree
// polynomial is required.
struct DegenerateError : Error {
    using Error::Error;
};

// Iterative refinement failed to reach its tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

// A solution given in closed form blows up inside the requested interval.
// `pole_time` is the estimated location of the singularity.
struct PoleError : Error {
    double pole_time;
    PoleError(const std::string& what, double t) : Error(what), pole_time(t) {}
};

// A solver restricted to homogeneous systems received forcing terms.
struct NotHomogeneousError : Error {
    using Error::Error;
};

// A numerically integrated state exceeded the magnitude guard.
struct BlowUpError : Error {
    double blow_time;
    BlowUpError(const std::string& what, double t) : Error(what), blow_time(t) {}
};

// Phase continuity of a complex square root could not be certified.
struct BranchError : Error {
    using Error::Error;
};

// Bad CLI flags or config-file contents.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace ppcavity

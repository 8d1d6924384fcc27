#ifndef CCARM_ERRORS_HPP
#define CCARM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ccarm {

/// Base class for all domain errors thrown by the library.
class KinematicsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bending angle outside [0, phi_max] for the given geometry.
class PhiOutOfRange : public KinematicsError {
public:
    PhiOutOfRange(double phi, double phi_max)
        : KinematicsError("phi " + std::to_string(phi) +
                          " exceeds phi_max " + std::to_string(phi_max)),
          phi_(phi) {}
    double phi() const { return phi_; }

private:
    double phi_;
};

/// Backbone coordinate outside [0, 1].
class XiOutOfRange : public KinematicsError {
public:
    explicit XiOutOfRange(double xi)
        : KinematicsError("backbone coordinate xi " + std::to_string(xi) +
                          " outside [0, 1]") {}
};

/// Sample count too small for the requested discretization.
class BadSampleCount : public KinematicsError {
public:
    using KinematicsError::KinematicsError;
};

/// Target tip position is not on the reachable surface; carries the
/// reconstruction residual in meters.
class Unreachable : public KinematicsError {
public:
    explicit Unreachable(double residual)
        : KinematicsError("target unreachable, residual " +
                          std::to_string(residual) + " m"),
          residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Input lies outside the valid domain of a formula (e.g. a division by a
/// vanishing intermediate).
class DegenerateInput : public KinematicsError {
public:
    using KinematicsError::KinematicsError;
};

/// Path specification violates its invariants.
class SpecInvalid : public KinematicsError {
public:
    using KinematicsError::KinematicsError;
};

/// Operation requires a nonempty input.
class EmptyInput : public KinematicsError {
public:
    using KinematicsError::KinematicsError;
};

/// Configuration file could not be parsed.
class ConfigError : public KinematicsError {
public:
    using KinematicsError::KinematicsError;
};

}  // namespace ccarm

#endif  // CCARM_ERRORS_HPP

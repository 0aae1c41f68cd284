#pragma once

#include <stdexcept>
#include <string>

namespace eforce {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller/input problems (CLI exit code 1).
struct UsageError : Error {
    using Error::Error;
};
struct ConfigError : UsageError {
    using UsageError::UsageError;
};
struct RefusesGrid : UsageError {
    using UsageError::UsageError;
};
struct GridMismatch : UsageError {
    using UsageError::UsageError;
};

// Physically meaningless requests (CLI exit code 2).
struct PhysicsError : Error {
    using Error::Error;
};
struct TrapUnstable : PhysicsError {
    TrapUnstable(double omega_c, double omega_z);
    double omega_c;  // rad/s
    double omega_z;  // rad/s
};
struct DomainError : PhysicsError {
    using PhysicsError::PhysicsError;
};
struct SingularResponse : PhysicsError {
    using PhysicsError::PhysicsError;
};
struct QuadratureSingular : PhysicsError {
    using PhysicsError::PhysicsError;
};
struct NoFeasiblePoint : PhysicsError {
    using PhysicsError::PhysicsError;
};

// Numerical breakdown (CLI exit code 3).
struct NumericalError : Error {
    using Error::Error;
};
struct IntegrationFailure : NumericalError {
    using NumericalError::NumericalError;
};
struct StepTooLarge : NumericalError {
    using NumericalError::NumericalError;
};
struct NonFiniteState : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace eforce

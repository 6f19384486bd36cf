#pragma once

#include <stdexcept>
#include <string>

namespace relspin {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Momentum fails the mass-shell condition p.p = -m^2 (or has p0 <= 0).
struct OffShellMomentum : Error {
    using Error::Error;
};

/// A matrix handed to a rotation representation moves the time axis.
struct NotARotation : Error {
    using Error::Error;
};

/// A state term's momentum has no operator in the supplied family.
struct MissingSector : Error {
    using Error::Error;
};

/// A classical property evaluator returned NaN or infinity.
struct NonFiniteEvaluation : Error {
    using Error::Error;
};

/// A three-vector candidate violates A(v).v = 0 at a sample point.
struct OrthogonalityViolated : Error {
    using Error::Error;
};

/// Eigenvalue routines require a Hermitian input.
struct NotHermitian : Error {
    using Error::Error;
};

/// A 4x4 matrix is not a proper orthochronous Lorentz transformation.
struct NotLorentz : Error {
    using Error::Error;
};

}  // namespace relspin

#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "relspin/minkowski.hpp"

namespace relspin {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Spin quantum number stored as 2s, so half-integer spins stay exact.
struct SpinValue {
    int twice_s = 0;

    constexpr int dimension() const { return twice_s + 1; }
    constexpr double value() const { return 0.5 * twice_s; }
    /// s(s+1)
    constexpr double casimir() const { return 0.25 * twice_s * (twice_s + 2); }
};

/**
 * The Hermitian angular-momentum triple (Sx, Sy, Sz) in the Sz eigenbasis,
 * ordered m = s, s-1, ..., -s. Satisfies [S_i, S_j] = i eps_ijk S_k and
 * Sx^2 + Sy^2 + Sz^2 = s(s+1) 1.
 */
struct SpinMatrices {
    SpinValue spin;
    CMatrix x, y, z;

    const CMatrix& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    /// n . S for a real 3-vector n.
    CMatrix along(const std::array<double, 3>& n) const;
};

/// Ladder-operator construction of the spin-s matrices.
SpinMatrices angular_momentum_matrices(SpinValue s);

/// Axis-angle data of a 3x3 rotation; angle in [0, pi]. At angle pi the
/// axis sign is ambiguous and the lexicographically larger axis is chosen.
struct AxisAngle {
    std::array<double, 3> axis{0.0, 0.0, 1.0};
    double angle = 0.0;
};

AxisAngle axis_angle_from_rotation(const Eigen::Matrix3d& r);

/**
 * Spin-s representation D(R) = exp(-i angle n.S) of a spatial rotation.
 *
 * R must fix the time axis to within 1e-9 (else NotARotation). The result
 * is unitary; for half-integer s it represents the rotation group up to the
 * usual double-cover sign, which downstream code only uses in conjugations
 * and sesquilinear forms where the sign cancels.
 */
CMatrix rotation_rep(SpinValue s, const LorentzMatrix& r);

/// max |M - M^dagger| entry-wise.
double hermiticity_defect(const CMatrix& m);

/// max entry-wise absolute value.
double max_abs(const CMatrix& m);

}  // namespace relspin

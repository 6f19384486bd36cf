#pragma once

#include <array>
#include <cstddef>

#include <Eigen/Dense>

#include "relspin/errors.hpp"

namespace relspin {

// Conventions used throughout the library:
//   * metric signature (-,+,+,+), natural units hbar = c = 1
//   * Levi-Civita orientation eps_{0123} = +1
//   * Hodge dual of a 2-form:  (*T)_{ab} = -(1/2) eps_{abcd} T^{cd}

/**
 * A real four-vector, index 0 = time. No constraint is imposed at this
 * level; on-shell and normalization conditions live in the consuming types.
 */
struct FourVector {
    std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

    FourVector() = default;
    FourVector(double t, double x, double y, double z) : c{t, x, y, z} {}

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const double& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    FourVector operator+(const FourVector& o) const {
        return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
    }
    FourVector operator-(const FourVector& o) const {
        return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
    }
    FourVector operator*(double a) const { return {a * c[0], a * c[1], a * c[2], a * c[3]}; }
    FourVector operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
};

/// Minkowski inner product a.b = -a0 b0 + a1 b1 + a2 b2 + a3 b3.
double minkowski_dot(const FourVector& a, const FourVector& b);

/// Largest absolute component.
double max_abs(const FourVector& a);

/// eta = diag(-1,+1,+1,+1).
const Eigen::Matrix4d& minkowski_metric();

/// Sign of eps_{abcd} with eps_{0123} = +1; zero on repeated indices.
int levi_civita(int a, int b, int c, int d);

/// max |L^T eta L - eta| entry-wise.
double lorentz_defect(const Eigen::Matrix4d& m);

/**
 * A proper orthochronous Lorentz transformation. Instances are only ever
 * produced by the factories below (or products of such), so the constraints
 * L^T eta L = eta, det L = +1, L00 >= 1 hold to near machine precision.
 */
class LorentzMatrix {
public:
    static LorentzMatrix identity();

    /// Pure boost with rapidity chi along the (not necessarily unit) axis.
    static LorentzMatrix boost(const std::array<double, 3>& axis, double rapidity);

    /// Spatial rotation by angle about the axis, time row/column untouched.
    static LorentzMatrix rotation(const std::array<double, 3>& axis, double angle);

    /// Validating constructor for externally supplied matrices. Throws
    /// NotLorentz when the constraint defect exceeds 1e-12, det != +1, or
    /// the transformation reverses time orientation.
    static LorentzMatrix from_matrix(const Eigen::Matrix4d& m);

    const Eigen::Matrix4d& matrix() const { return m_; }

    FourVector apply(const FourVector& v) const;

    /// Exact group inverse eta L^T eta.
    LorentzMatrix inverse() const;

    LorentzMatrix operator*(const LorentzMatrix& o) const;

private:
    explicit LorentzMatrix(const Eigen::Matrix4d& m) : m_(m) {}
    Eigen::Matrix4d m_;
};

/**
 * Antisymmetric rank-2 tensor with six stored components, ordered
 * (01, 02, 03, 12, 13, 23). Antisymmetry is exact by layout. Index
 * variance (upper vs lower) is contextual and documented per use.
 */
struct AntisymTensor {
    std::array<double, 6> comp{};

    static int slot(int mu, int nu);  // -1 on diagonal

    double operator()(int mu, int nu) const;
    void set(int mu, int nu, double value);

    AntisymTensor operator+(const AntisymTensor& o) const;
    AntisymTensor operator*(double a) const;
};

/// Dual of a contravariant 2-form; result carries lowered indices:
/// (*T)_{ab} = -(1/2) eps_{abcd} T^{cd}.
AntisymTensor hodge_dual(const AntisymTensor& t_upper);

/// Flip the mixed time-space components (T^{0i} -> T_{0i} = -T^{0i}).
/// Raising and lowering are the same map for this metric.
AntisymTensor flip_index_variance(const AntisymTensor& t);

/// Contraction T_{ab} v^b for lowered-index components.
FourVector contract_lower(const AntisymTensor& t_lower, const FourVector& v);

/**
 * The rotationless ("standard") boost L(p) taking (m,0,0,0) to p.
 *
 * The momentum must satisfy p.p = -m^2 to within 1e-9 (relative to m^2) and
 * p0 > 0; momenta inside that band are renormalized onto the shell by
 * recomputing p0 from the spatial part. Throws OffShellMomentum otherwise.
 */
LorentzMatrix standard_boost(const FourVector& p, double m);

/// Little-group element L(Lp)^{-1} L L(p); fixes the time axis.
LorentzMatrix wigner_rotation(const LorentzMatrix& lambda, const FourVector& p, double m);

}  // namespace relspin

#include "relspin/spin_algebra.hpp"

#include <cmath>

namespace relspin {

CMatrix SpinMatrices::along(const std::array<double, 3>& n) const {
    return n[0] * x + n[1] * y + n[2] * z;
}

SpinMatrices angular_momentum_matrices(SpinValue s) {
    const int d = s.dimension();
    const double sv = s.value();
    CMatrix sp = CMatrix::Zero(d, d);  // raising operator
    CMatrix sz = CMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        const double m = sv - k;  // row k holds eigenvalue m of Sz
        sz(k, k) = m;
        if (k + 1 < d) {
            const double mlow = m - 1.0;
            sp(k, k + 1) = std::sqrt(s.casimir() - mlow * (mlow + 1.0));
        }
    }
    const CMatrix sm = sp.adjoint();
    SpinMatrices out;
    out.spin = s;
    out.x = 0.5 * (sp + sm);
    out.y = Complex(0.0, -0.5) * (sp - sm);
    out.z = sz;
    return out;
}

AxisAngle axis_angle_from_rotation(const Eigen::Matrix3d& r) {
    AxisAngle out;
    const double ctheta = std::clamp(0.5 * (r.trace() - 1.0), -1.0, 1.0);
    out.angle = std::acos(ctheta);

    Eigen::Vector3d w(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
    const double wn = w.norm();  // = 2 sin(angle)
    if (wn > 1e-6) {
        w /= wn;
        out.axis = {w(0), w(1), w(2)};
        return out;
    }
    if (out.angle < 1e-6) return out;  // identity; axis immaterial

    // angle ~ pi: recover the axis from R + I = 2 n n^T (at angle = pi).
    int i0 = 0;
    for (int i = 1; i < 3; ++i)
        if (r(i, i) > r(i0, i0)) i0 = i;
    Eigen::Vector3d n = Eigen::Vector3d::Zero();
    n(i0) = std::sqrt(std::max(0.0, 0.5 * (r(i0, i0) + 1.0)));
    for (int j = 0; j < 3; ++j)
        if (j != i0) n(j) = 0.5 * (r(i0, j) + r(j, i0)) / (2.0 * n(i0));
    n.normalize();
    // Break the n vs -n ambiguity: keep the lexicographically larger axis.
    for (int j = 0; j < 3; ++j) {
        if (n(j) > 0.0) break;
        if (n(j) < 0.0) {
            n = -n;
            break;
        }
    }
    out.axis = {n(0), n(1), n(2)};
    return out;
}

CMatrix rotation_rep(SpinValue s, const LorentzMatrix& r) {
    const Eigen::Matrix4d& m = r.matrix();
    double axis_defect = std::abs(m(0, 0) - 1.0);
    for (int i = 1; i < 4; ++i)
        axis_defect = std::max({axis_defect, std::abs(m(i, 0)), std::abs(m(0, i))});
    if (axis_defect > 1e-9) throw NotARotation("transformation moves the time axis");

    const AxisAngle aa = axis_angle_from_rotation(m.bottomRightCorner<3, 3>());
    const SpinMatrices spin = angular_momentum_matrices(s);
    const CMatrix h = spin.along(aa.axis);  // Hermitian generator n.S

    // Exact exponential through the eigendecomposition of n.S.
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const int d = s.dimension();
    CMatrix phase = CMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k)
        phase(k, k) = std::exp(Complex(0.0, -aa.angle * es.eigenvalues()(k)));
    return es.eigenvectors() * phase * es.eigenvectors().adjoint();
}

double hermiticity_defect(const CMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs(const CMatrix& m) {
    return m.cwiseAbs().maxCoeff();
}

}  // namespace relspin

#include "relspin/minkowski.hpp"

#include <cmath>
#include <sstream>

namespace relspin {

double minkowski_dot(const FourVector& a, const FourVector& b) {
    return -a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2] + a.c[3] * b.c[3];
}

double max_abs(const FourVector& a) {
    double m = 0.0;
    for (double x : a.c) m = std::max(m, std::abs(x));
    return m;
}

const Eigen::Matrix4d& minkowski_metric() {
    static const Eigen::Matrix4d eta = [] {
        Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
        g(0, 0) = -1.0;
        return g;
    }();
    return eta;
}

int levi_civita(int a, int b, int c, int d) {
    int idx[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) {
                std::swap(idx[i], idx[j]);
                sign = -sign;
            }
        }
    }
    return sign;
}

double lorentz_defect(const Eigen::Matrix4d& m) {
    const Eigen::Matrix4d& eta = minkowski_metric();
    return (m.transpose() * eta * m - eta).cwiseAbs().maxCoeff();
}

LorentzMatrix LorentzMatrix::identity() {
    return LorentzMatrix(Eigen::Matrix4d::Identity());
}

LorentzMatrix LorentzMatrix::boost(const std::array<double, 3>& axis, double rapidity) {
    const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (norm == 0.0) {
        if (rapidity != 0.0) throw Error("boost axis must be nonzero");
        return identity();
    }
    const double n[3] = {axis[0] / norm, axis[1] / norm, axis[2] / norm};
    const double ch = std::cosh(rapidity);
    const double sh = std::sinh(rapidity);
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m(0, 0) = ch;
    for (int i = 0; i < 3; ++i) {
        m(0, i + 1) = m(i + 1, 0) = sh * n[i];
        for (int j = 0; j < 3; ++j) m(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (ch - 1.0) * n[i] * n[j];
    }
    return LorentzMatrix(m);
}

LorentzMatrix LorentzMatrix::rotation(const std::array<double, 3>& axis, double angle) {
    const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (norm == 0.0) {
        if (angle != 0.0) throw Error("rotation axis must be nonzero");
        return identity();
    }
    const double n[3] = {axis[0] / norm, axis[1] / norm, axis[2] / norm};
    const double ca = std::cos(angle);
    const double sa = std::sin(angle);
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    // R_ij = cos(a) d_ij + (1-cos(a)) n_i n_j - sin(a) eps_ijk n_k
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double r = ca * (i == j ? 1.0 : 0.0) + (1.0 - ca) * n[i] * n[j];
            for (int k = 0; k < 3; ++k) r -= sa * levi_civita(0, i + 1, j + 1, k + 1) * n[k];
            m(i + 1, j + 1) = r;
        }
    }
    return LorentzMatrix(m);
}

LorentzMatrix LorentzMatrix::from_matrix(const Eigen::Matrix4d& m) {
    const double defect = lorentz_defect(m);
    if (defect > 1e-12) {
        std::ostringstream os;
        os << "matrix violates L^T eta L = eta (defect " << defect << ")";
        throw NotLorentz(os.str());
    }
    if (m.determinant() < 0.0) throw NotLorentz("improper transformation (det < 0)");
    if (m(0, 0) < 1.0 - 1e-12) throw NotLorentz("non-orthochronous transformation (L00 < 1)");
    return LorentzMatrix(m);
}

FourVector LorentzMatrix::apply(const FourVector& v) const {
    FourVector out;
    for (int mu = 0; mu < 4; ++mu) {
        double s = 0.0;
        for (int nu = 0; nu < 4; ++nu) s += m_(mu, nu) * v[nu];
        out[mu] = s;
    }
    return out;
}

LorentzMatrix LorentzMatrix::inverse() const {
    const Eigen::Matrix4d& eta = minkowski_metric();
    return LorentzMatrix(eta * m_.transpose() * eta);
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& o) const {
    return LorentzMatrix(m_ * o.m_);
}

namespace {
// Component order (01, 02, 03, 12, 13, 23).
constexpr int kSlot[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 3, 4},
    {1, 3, -1, 5},
    {2, 4, 5, -1},
};
constexpr double kSign[4][4] = {
    {0, 1, 1, 1},
    {-1, 0, 1, 1},
    {-1, -1, 0, 1},
    {-1, -1, -1, 0},
};
// Hodge dual in the stored-component basis: (*T)[i] = dual_sign[i] * T[dual_src[i]].
constexpr int kDualSrc[6] = {5, 4, 3, 2, 1, 0};
constexpr double kDualSign[6] = {-1.0, +1.0, -1.0, -1.0, +1.0, -1.0};
}  // namespace

int AntisymTensor::slot(int mu, int nu) { return kSlot[mu][nu]; }

double AntisymTensor::operator()(int mu, int nu) const {
    const int s = kSlot[mu][nu];
    if (s < 0) return 0.0;
    return kSign[mu][nu] * comp[static_cast<std::size_t>(s)];
}

void AntisymTensor::set(int mu, int nu, double value) {
    const int s = kSlot[mu][nu];
    if (s < 0) {
        if (value != 0.0) throw Error("diagonal of an antisymmetric tensor must be zero");
        return;
    }
    comp[static_cast<std::size_t>(s)] = kSign[mu][nu] * value;
}

AntisymTensor AntisymTensor::operator+(const AntisymTensor& o) const {
    AntisymTensor r;
    for (int i = 0; i < 6; ++i) r.comp[i] = comp[i] + o.comp[i];
    return r;
}

AntisymTensor AntisymTensor::operator*(double a) const {
    AntisymTensor r;
    for (int i = 0; i < 6; ++i) r.comp[i] = a * comp[i];
    return r;
}

AntisymTensor hodge_dual(const AntisymTensor& t_upper) {
    AntisymTensor r;
    for (int i = 0; i < 6; ++i) r.comp[i] = kDualSign[i] * t_upper.comp[static_cast<std::size_t>(kDualSrc[i])];
    return r;
}

AntisymTensor flip_index_variance(const AntisymTensor& t) {
    AntisymTensor r = t;
    for (int i = 0; i < 3; ++i) r.comp[i] = -r.comp[i];  // slots 0..2 carry one time index
    return r;
}

FourVector contract_lower(const AntisymTensor& t_lower, const FourVector& v) {
    FourVector out;
    for (int a = 0; a < 4; ++a) {
        double s = 0.0;
        for (int b = 0; b < 4; ++b) s += t_lower(a, b) * v[b];
        out[a] = s;
    }
    return out;
}

LorentzMatrix standard_boost(const FourVector& p, double m) {
    if (!(m > 0.0)) throw OffShellMomentum("mass must be positive");
    if (!(p[0] > 0.0)) throw OffShellMomentum("momentum must have positive energy");
    const double shell = minkowski_dot(p, p) + m * m;
    if (std::abs(shell) > 1e-9 * m * m) {
        std::ostringstream os;
        os << "momentum off shell: |p.p + m^2| / m^2 = " << std::abs(shell) / (m * m);
        throw OffShellMomentum(os.str());
    }
    const double px = p[1], py = p[2], pz = p[3];
    const double pn = std::sqrt(px * px + py * py + pz * pz);
    if (pn == 0.0) return LorentzMatrix::identity();
    return LorentzMatrix::boost({px, py, pz}, std::asinh(pn / m));
}

LorentzMatrix wigner_rotation(const LorentzMatrix& lambda, const FourVector& p, double m) {
    const LorentzMatrix lp = standard_boost(p, m);
    const FourVector q = lambda.apply(p);
    const LorentzMatrix lq = standard_boost(q, m);
    return lq.inverse() * lambda * lp;
}

}  // namespace relspin

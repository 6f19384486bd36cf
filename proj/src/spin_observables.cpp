#include "relspin/spin_observables.hpp"

#include <cmath>

namespace relspin {

namespace {
// Same slot table as AntisymTensor: (01, 02, 03, 12, 13, 23).
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
constexpr int kDualSrc[6] = {5, 4, 3, 2, 1, 0};
constexpr double kDualSign[6] = {-1.0, +1.0, -1.0, -1.0, +1.0, -1.0};

double metric_sign(int mu) { return mu == 0 ? -1.0 : 1.0; }
}  // namespace

SpinTensorOp::SpinTensorOp(const OnShellMomentum& p, std::array<CMatrix, 6> upper)
    : p_(p), comp_(std::move(upper)) {}

CMatrix SpinTensorOp::upper(int mu, int nu) const {
    const int s = kSlot[mu][nu];
    if (s < 0) return CMatrix::Zero(dimension(), dimension());
    return kSign[mu][nu] * comp_[static_cast<std::size_t>(s)];
}

CMatrix SpinTensorOp::lower(int mu, int nu) const {
    return metric_sign(mu) * metric_sign(nu) * upper(mu, nu);
}

CMatrix SpinTensorOp::dual_lower(int mu, int nu) const {
    const int s = kSlot[mu][nu];
    if (s < 0) return CMatrix::Zero(dimension(), dimension());
    return kSign[mu][nu] * kDualSign[s] * comp_[static_cast<std::size_t>(kDualSrc[s])];
}

std::array<CMatrix, 4> SpinTensorOp::contract(const FourVector& v) const {
    std::array<CMatrix, 4> out;
    for (int a = 0; a < 4; ++a) {
        CMatrix acc = CMatrix::Zero(dimension(), dimension());
        for (int b = 0; b < 4; ++b)
            if (kSlot[a][b] >= 0) acc += lower(a, b) * v[b];
        out[static_cast<std::size_t>(a)] = acc;
    }
    return out;
}

std::array<CMatrix, 4> SpinTensorOp::dual_contract(const FourVector& v) const {
    std::array<CMatrix, 4> out;
    for (int a = 0; a < 4; ++a) {
        CMatrix acc = CMatrix::Zero(dimension(), dimension());
        for (int b = 0; b < 4; ++b)
            if (kSlot[a][b] >= 0) acc += dual_lower(a, b) * v[b];
        out[static_cast<std::size_t>(a)] = acc;
    }
    return out;
}

CMatrix SpinTensorOp::norm_operator() const {
    CMatrix acc = CMatrix::Zero(dimension(), dimension());
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (kSlot[a][b] >= 0) acc += 0.5 * lower(a, b) * upper(a, b);
    return acc;
}

ObserverFrame::ObserverFrame(const FourVector& v, const FourVector& e1, const FourVector& e2,
                             const FourVector& e3)
    : legs_{v, e1, e2, e3} {
    if (orthonormality_defect() > 1e-10) throw Error("observer tetrad is not orthonormal");
    if (!(v[0] > 0.0)) throw Error("observer velocity must be future-pointing");
}

ObserverFrame ObserverFrame::lab() {
    return ObserverFrame({1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1});
}

ObserverFrame ObserverFrame::transformed(const LorentzMatrix& lambda) const {
    return ObserverFrame(lambda.apply(legs_[0]), lambda.apply(legs_[1]), lambda.apply(legs_[2]),
                         lambda.apply(legs_[3]));
}

ObserverFrame ObserverFrame::comoving(const OnShellMomentum& p) {
    return lab().transformed(standard_boost(p.four_vector(), p.mass()));
}

double ObserverFrame::orthonormality_defect() const {
    double defect = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const double want = (a == b) ? (a == 0 ? -1.0 : 1.0) : 0.0;
            defect = std::max(defect, std::abs(minkowski_dot(legs_[static_cast<std::size_t>(a)],
                                                             legs_[static_cast<std::size_t>(b)]) -
                                               want));
        }
    }
    return defect;
}

SpinTensorOp intrinsic_spin_tensor(SpinValue s, const OnShellMomentum& p) {
    const auto w = pauli_lubanski_lower(s, p);
    const double m2 = p.mass() * p.mass();
    const Complex factor(0.0, -1.0 / m2);  // i / P^2 with P^2 = -m^2
    std::array<CMatrix, 6> upper;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = mu + 1; nu < 4; ++nu) {
            const CMatrix low =
                factor * (w[static_cast<std::size_t>(mu)] * w[static_cast<std::size_t>(nu)] -
                          w[static_cast<std::size_t>(nu)] * w[static_cast<std::size_t>(mu)]);
            upper[static_cast<std::size_t>(kSlot[mu][nu])] =
                metric_sign(mu) * metric_sign(nu) * low;
        }
    }
    return SpinTensorOp(p, std::move(upper));
}

namespace {
// Tetrad component X_(i) = X_a e^a_(i) of a lowered-index four-vector of
// operators, on the frame's i-th spatial leg.
CMatrix project_on_leg(const std::array<CMatrix, 4>& x_lower, const FourVector& leg) {
    CMatrix acc = leg[0] * x_lower[0];
    for (int a = 1; a < 4; ++a) acc += leg[a] * x_lower[static_cast<std::size_t>(a)];
    return acc;
}
}  // namespace

std::array<SectorOperator, 3> sigma_vector(const SpinTensorOp& s, const ObserverFrame& frame) {
    const auto sig = s.dual_contract(frame.velocity());
    std::array<SectorOperator, 3> out{SectorOperator{s.momentum(), CMatrix()},
                                      SectorOperator{s.momentum(), CMatrix()},
                                      SectorOperator{s.momentum(), CMatrix()}};
    for (int i = 0; i < 3; ++i)
        out[static_cast<std::size_t>(i)].matrix = project_on_leg(sig, frame.axis(i));
    return out;
}

std::array<SectorOperator, 3> mass_moment(const SpinTensorOp& s, const ObserverFrame& frame) {
    const auto mom = s.contract(frame.velocity());
    std::array<SectorOperator, 3> out{SectorOperator{s.momentum(), CMatrix()},
                                      SectorOperator{s.momentum(), CMatrix()},
                                      SectorOperator{s.momentum(), CMatrix()}};
    for (int i = 0; i < 3; ++i)
        out[static_cast<std::size_t>(i)].matrix = project_on_leg(mom, frame.axis(i));
    return out;
}

SpinTensorOp reconstruct_tensor(const std::array<SectorOperator, 3>& sigma,
                                const std::array<SectorOperator, 3>& moment,
                                const ObserverFrame& frame) {
    const int d = static_cast<int>(sigma[0].matrix.rows());
    const FourVector& v = frame.velocity();

    // Rebuild contravariant four-vectors from the spatial tetrad components;
    // both Sigma and M are orthogonal to v, so the timelike leg drops out.
    std::array<CMatrix, 4> sig_up, mom_up;
    for (int a = 0; a < 4; ++a) {
        sig_up[static_cast<std::size_t>(a)] = CMatrix::Zero(d, d);
        mom_up[static_cast<std::size_t>(a)] = CMatrix::Zero(d, d);
        for (int i = 0; i < 3; ++i) {
            sig_up[static_cast<std::size_t>(a)] += frame.axis(i)[a] * sigma[static_cast<std::size_t>(i)].matrix;
            mom_up[static_cast<std::size_t>(a)] += frame.axis(i)[a] * moment[static_cast<std::size_t>(i)].matrix;
        }
    }

    std::array<CMatrix, 6> upper;
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            const double va = metric_sign(a) * v[a];  // v_a
            const double vb = metric_sign(b) * v[b];
            CMatrix low = va * (metric_sign(b) * mom_up[static_cast<std::size_t>(b)]) -
                          vb * (metric_sign(a) * mom_up[static_cast<std::size_t>(a)]);
            for (int c = 0; c < 4; ++c) {
                if (v[c] == 0.0) continue;
                for (int e = 0; e < 4; ++e) {
                    const int sign = levi_civita(a, b, c, e);
                    if (sign != 0) low += (sign * v[c]) * sig_up[static_cast<std::size_t>(e)];
                }
            }
            upper[static_cast<std::size_t>(kSlot[a][b])] = metric_sign(a) * metric_sign(b) * low;
        }
    }
    return SpinTensorOp(sigma[0].momentum, std::move(upper));
}

CMatrix sigma_closed_form(SpinValue s, const OnShellMomentum& p, int i) {
    const SpinMatrices spin = angular_momentum_matrices(s);
    const auto& q = p.spatial();
    const CMatrix sp = spin.along(q);
    const double m = p.mass();
    return (p.energy() * spin[i] - (q[i] / (m + p.energy())) * sp) / m;
}

std::array<OperatorFamily, 3> wigner_spin_family(SpinValue s) {
    const SpinMatrices spin = angular_momentum_matrices(s);
    std::array<OperatorFamily, 3> out{
        OperatorFamily::from_function([spin](const OnShellMomentum&) { return spin.x; }),
        OperatorFamily::from_function([spin](const OnShellMomentum&) { return spin.y; }),
        OperatorFamily::from_function([spin](const OnShellMomentum&) { return spin.z; })};
    return out;
}

double su2_defect(const std::array<SectorOperator, 3>& a) {
    double defect = 0.0;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        const CMatrix comm = a[static_cast<std::size_t>(i)].matrix * a[static_cast<std::size_t>(j)].matrix -
                             a[static_cast<std::size_t>(j)].matrix * a[static_cast<std::size_t>(i)].matrix;
        defect = std::max(defect,
                          max_abs(comm - Complex(0.0, 1.0) * a[static_cast<std::size_t>(k)].matrix));
    }
    return defect;
}

}  // namespace relspin

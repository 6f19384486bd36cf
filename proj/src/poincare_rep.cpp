#include "relspin/poincare_rep.hpp"

#include <cmath>
#include <sstream>

namespace relspin {

OnShellMomentum::OnShellMomentum(double mass, const std::array<double, 3>& spatial)
    : m_(mass), p_(spatial) {
    if (!(mass > 0.0)) throw OffShellMomentum("mass must be positive");
    e_ = std::sqrt(m_ * m_ + p_[0] * p_[0] + p_[1] * p_[1] + p_[2] * p_[2]);
}

OnShellMomentum OnShellMomentum::from_four_vector(const FourVector& p, double mass) {
    if (!(mass > 0.0)) throw OffShellMomentum("mass must be positive");
    if (!(p[0] > 0.0)) throw OffShellMomentum("momentum must have positive energy");
    const double shell = minkowski_dot(p, p) + mass * mass;
    if (std::abs(shell) > 1e-9 * mass * mass) {
        std::ostringstream os;
        os << "momentum off shell: |p.p + m^2| / m^2 = " << std::abs(shell) / (mass * mass);
        throw OffShellMomentum(os.str());
    }
    return {mass, {p[1], p[2], p[3]}};
}

double OnShellMomentum::spatial_norm() const {
    return std::sqrt(p_[0] * p_[0] + p_[1] * p_[1] + p_[2] * p_[2]);
}

bool same_momentum(const OnShellMomentum& a, const OnShellMomentum& b) {
    const FourVector fa = a.four_vector();
    const FourVector fb = b.four_vector();
    const double scale = std::max({1.0, max_abs(fa), max_abs(fb)});
    return max_abs(fa - fb) <= 1e-9 * scale;
}

OperatorFamily OperatorFamily::from_function(std::function<CMatrix(const OnShellMomentum&)> fn) {
    OperatorFamily f;
    f.fn_ = std::move(fn);
    return f;
}

OperatorFamily OperatorFamily::from_sectors(std::vector<SectorOperator> sectors) {
    OperatorFamily f;
    f.sectors_ = std::move(sectors);
    return f;
}

CMatrix OperatorFamily::at(const OnShellMomentum& p) const {
    if (fn_) return fn_(p);
    for (const auto& s : sectors_)
        if (same_momentum(s.momentum, p)) return s.matrix;
    std::ostringstream os;
    os << "no operator sector at momentum (" << p.energy() << ", " << p.spatial()[0] << ", "
       << p.spatial()[1] << ", " << p.spatial()[2] << ")";
    throw MissingSector(os.str());
}

MomentumSpinState::MomentumSpinState(SpinValue spin, std::vector<StateTerm> terms)
    : spin_(spin), terms_(std::move(terms)) {
    if (terms_.empty()) throw Error("state needs at least one term");
    const int d = spin.dimension();
    double n2 = 0.0;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].amplitude.size() != d) throw Error("amplitude dimension does not match spin");
        if (std::abs(terms_[i].momentum.mass() - terms_[0].momentum.mass()) > 1e-12)
            throw Error("all terms must share one mass");
        for (std::size_t j = i + 1; j < terms_.size(); ++j)
            if (same_momentum(terms_[i].momentum, terms_[j].momentum))
                throw Error("momentum labels must be distinct");
        n2 += terms_[i].amplitude.squaredNorm();
    }
    if (n2 < 1e-24) throw Error("state has zero norm");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& t : terms_) t.amplitude *= inv;
}

MomentumSpinState MomentumSpinState::single(SpinValue spin, const OnShellMomentum& p,
                                            const CVector& amp) {
    return MomentumSpinState(spin, {StateTerm{p, amp}});
}

double MomentumSpinState::norm_squared() const {
    double n2 = 0.0;
    for (const auto& t : terms_) n2 += t.amplitude.squaredNorm();
    return n2;
}

Complex state_overlap(const MomentumSpinState& a, const MomentumSpinState& b) {
    Complex s = 0.0;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            if (same_momentum(ta.momentum, tb.momentum)) s += ta.amplitude.dot(tb.amplitude);
    return s;
}

std::array<SectorOperator, 4> pauli_lubanski(SpinValue s, const OnShellMomentum& p) {
    const SpinMatrices spin = angular_momentum_matrices(s);
    const auto& q = p.spatial();
    const CMatrix ps = spin.along(q);  // p.S
    const double denom = p.energy() + p.mass();
    std::array<SectorOperator, 4> w{SectorOperator{p, ps}, SectorOperator{p, CMatrix()},
                                    SectorOperator{p, CMatrix()}, SectorOperator{p, CMatrix()}};
    for (int i = 0; i < 3; ++i)
        w[static_cast<std::size_t>(i + 1)].matrix = p.mass() * spin[i] + (q[i] / denom) * ps;
    return w;
}

std::array<CMatrix, 4> pauli_lubanski_lower(SpinValue s, const OnShellMomentum& p) {
    const auto w = pauli_lubanski(s, p);
    return {-w[0].matrix, w[1].matrix, w[2].matrix, w[3].matrix};
}

MomentumSpinState boost_state(const LorentzMatrix& lambda, const MomentumSpinState& psi) {
    std::vector<StateTerm> out;
    out.reserve(psi.terms().size());
    for (const auto& t : psi.terms()) {
        const LorentzMatrix r = wigner_rotation(lambda, t.momentum.four_vector(), t.momentum.mass());
        const CMatrix d = rotation_rep(psi.spin(), r);
        const FourVector q = lambda.apply(t.momentum.four_vector());
        out.push_back({OnShellMomentum::from_four_vector(q, t.momentum.mass()), d * t.amplitude});
    }
    return MomentumSpinState(psi.spin(), std::move(out));
}

Complex expectation(const MomentumSpinState& psi, const OperatorFamily& family) {
    Complex sum = 0.0;
    for (const auto& t : psi.terms()) {
        const CMatrix op = family.at(t.momentum);
        sum += t.amplitude.dot(op * t.amplitude);
    }
    return sum;
}

}  // namespace relspin

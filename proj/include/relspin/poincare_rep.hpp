#pragma once

#include <array>
#include <functional>
#include <vector>

#include "relspin/spin_algebra.hpp"

namespace relspin {

/**
 * On-shell momentum of a massive particle: the energy is always derived
 * from the spatial part, so p.p = -m^2 holds by construction.
 */
class OnShellMomentum {
public:
    OnShellMomentum(double mass, const std::array<double, 3>& spatial);

    static OnShellMomentum rest(double mass) { return {mass, {0.0, 0.0, 0.0}}; }

    /// Accepts four-vectors within 1e-9 (relative to m^2) of the shell and
    /// renormalizes them; throws OffShellMomentum otherwise.
    static OnShellMomentum from_four_vector(const FourVector& p, double mass);

    double mass() const { return m_; }
    double energy() const { return e_; }
    const std::array<double, 3>& spatial() const { return p_; }
    double spatial_norm() const;
    FourVector four_vector() const { return {e_, p_[0], p_[1], p_[2]}; }

private:
    double m_;
    std::array<double, 3> p_;
    double e_;
};

/// Componentwise match within 1e-9 relative tolerance; used to key sectors.
bool same_momentum(const OnShellMomentum& a, const OnShellMomentum& b);

/// A complex matrix acting on the spin space attached to one momentum.
struct SectorOperator {
    OnShellMomentum momentum;
    CMatrix matrix;
};

/**
 * Momentum-indexed operator family O(p). Backed either by a total function
 * or by an explicit sector list, in which case lookups miss with
 * MissingSector.
 */
class OperatorFamily {
public:
    static OperatorFamily from_function(std::function<CMatrix(const OnShellMomentum&)> fn);
    static OperatorFamily from_sectors(std::vector<SectorOperator> sectors);

    CMatrix at(const OnShellMomentum& p) const;

private:
    OperatorFamily() = default;
    std::function<CMatrix(const OnShellMomentum&)> fn_;
    std::vector<SectorOperator> sectors_;
};

/// One momentum-spin basis term of a superposition.
struct StateTerm {
    OnShellMomentum momentum;
    CVector amplitude;
};

/**
 * Finite superposition of momentum-spin kets with unit total norm. Distinct
 * momenta are treated as orthonormal labels, so no relativistic measure
 * factor ever appears.
 */
class MomentumSpinState {
public:
    /// Normalizes the total norm to one; rejects empty/degenerate input and
    /// terms whose momenta coincide within the sector-matching tolerance.
    MomentumSpinState(SpinValue spin, std::vector<StateTerm> terms);

    static MomentumSpinState single(SpinValue spin, const OnShellMomentum& p, const CVector& amp);

    SpinValue spin() const { return spin_; }
    const std::vector<StateTerm>& terms() const { return terms_; }
    double norm_squared() const;

private:
    SpinValue spin_;
    std::vector<StateTerm> terms_;
};

/// Squared overlap-relevant inner product <a|b> over matching momentum labels.
Complex state_overlap(const MomentumSpinState& a, const MomentumSpinState& b);

/**
 * Pauli-Lubanski operator restricted to one momentum sector,
 * W^0 = p.S,  W^i = m S_i + (p.S) p_i / (p0 + m),
 * i.e. the boosted rest-frame operator (0, m S). Satisfies W.p = 0 and
 * W.W = m^2 s(s+1).
 */
std::array<SectorOperator, 4> pauli_lubanski(SpinValue s, const OnShellMomentum& p);

/// Lowered-index components W_a of the same operator.
std::array<CMatrix, 4> pauli_lubanski_lower(SpinValue s, const OnShellMomentum& p);

/// Wigner induced action: (p, chi) -> (Lp, D(R(L,p)) chi) term by term.
MomentumSpinState boost_state(const LorentzMatrix& lambda, const MomentumSpinState& psi);

/// Sum of single-sector contributions chi^dag O(p) chi.
Complex expectation(const MomentumSpinState& psi, const OperatorFamily& family);

}  // namespace relspin

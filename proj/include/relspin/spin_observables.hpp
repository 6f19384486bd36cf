#pragma once

#include "relspin/poincare_rep.hpp"

namespace relspin {

/**
 * Antisymmetric tensor of spin-space operators attached to one momentum
 * sector. Components are stored contravariant (S^{mu nu}) in the slot order
 * (01, 02, 03, 12, 13, 23); antisymmetry is exact by layout.
 */
class SpinTensorOp {
public:
    SpinTensorOp(const OnShellMomentum& p, std::array<CMatrix, 6> upper);

    const OnShellMomentum& momentum() const { return p_; }
    int dimension() const { return static_cast<int>(comp_[0].rows()); }

    /// S^{mu nu}, signed lookup.
    CMatrix upper(int mu, int nu) const;
    /// S_{mu nu}.
    CMatrix lower(int mu, int nu) const;
    /// (*S)_{mu nu} = -(1/2) eps_{mu nu c d} S^{cd}.
    CMatrix dual_lower(int mu, int nu) const;

    /// S_{ab} v^b as four lowered-index operator components.
    std::array<CMatrix, 4> contract(const FourVector& v) const;
    /// (*S)_{ab} v^b.
    std::array<CMatrix, 4> dual_contract(const FourVector& v) const;

    /// (1/2) S_{ab} S^{ab}; equals s(s+1) times the identity.
    CMatrix norm_operator() const;

private:
    OnShellMomentum p_;
    std::array<CMatrix, 6> comp_;
};

/**
 * Orthonormal observer tetrad {v, e1, e2, e3} with timelike leg v
 * (v.v = -1, v0 > 0) and spacelike legs e_i. Frames other than the lab
 * are obtained by applying a Lorentz transformation to the lab tetrad.
 */
class ObserverFrame {
public:
    static ObserverFrame lab();
    /// Frame dragged along by a transformation: every leg maps through it.
    ObserverFrame transformed(const LorentzMatrix& lambda) const;
    /// Rest frame of a momentum, reached by the standard boost.
    static ObserverFrame comoving(const OnShellMomentum& p);

    const FourVector& velocity() const { return legs_[0]; }
    const FourVector& axis(int i) const { return legs_[static_cast<std::size_t>(i + 1)]; }
    /// max deviation of the Gram matrix from eta.
    double orthonormality_defect() const;

private:
    ObserverFrame(const FourVector& v, const FourVector& e1, const FourVector& e2,
                  const FourVector& e3);
    std::array<FourVector, 4> legs_;
};

/**
 * The intrinsic spin tensor S_ab = i [W_a, W_b] / P^2 with P^2 = -m^2,
 * built directly from the numerical commutators of the Pauli-Lubanski
 * components. Satisfies (*S)_{ab} p^b = W_a, S_{ab} p^b = 0 and
 * (1/2) S_{ab} S^{ab} = s(s+1).
 */
SpinTensorOp intrinsic_spin_tensor(SpinValue s, const OnShellMomentum& p);

/// Angular part Sigma_(i) = (*S)_{ab} v^b e^a_(i) on the frame's spatial legs.
std::array<SectorOperator, 3> sigma_vector(const SpinTensorOp& s, const ObserverFrame& frame);

/// Mass-moment part M_(i) = S_{ab} v^b e^a_(i); vanishes in the co-moving frame.
std::array<SectorOperator, 3> mass_moment(const SpinTensorOp& s, const ObserverFrame& frame);

/// Rebuild the tensor from its angular and mass-moment parts:
/// S_{ab} = v_a M_b - v_b M_a + eps_{abcd} v^c Sigma^d.
SpinTensorOp reconstruct_tensor(const std::array<SectorOperator, 3>& sigma,
                                const std::array<SectorOperator, 3>& moment,
                                const ObserverFrame& frame);

/// Lab-frame closed form (P0 S_i - (S.P) P_i / (m + P0)) / m of the angular part.
CMatrix sigma_closed_form(SpinValue s, const OnShellMomentum& p, int i);

/// The momentum-independent Wigner spin matrices as a three-component family.
std::array<OperatorFamily, 3> wigner_spin_family(SpinValue s);

/// Largest deviation from [A_i, A_j] = i eps_ijk A_k over the cyclic triples.
double su2_defect(const std::array<SectorOperator, 3>& a);

}  // namespace relspin

#pragma once

#include "relspin/check_report.hpp"
#include "relspin/spin_observables.hpp"

namespace relspin {

/// Constant classical electromagnetic field in the lab frame plus the
/// gyromagnetic ratio entering H = -alpha F^{ab} S_{ab} / 2.
struct EMField {
    std::array<double, 3> electric{};
    std::array<double, 3> magnetic{};
    double alpha = 1.0;
};

/**
 * Electromagnetic field tensor F^{ab} with F^{0i} = E_i and
 * F^{ij} = eps_ijk B_k. These signs are pinned by requiring the tensor
 * coupling to reproduce the lab-frame closed form; `orientation` = -1
 * deliberately breaks that audit (kept switchable so the test can prove
 * the convention is load-bearing).
 */
AntisymTensor field_tensor(const EMField& f, double orientation = +1.0);

/// F'^{ab} = L^a_c L^b_d F^{cd}.
AntisymTensor transform_field_tensor(const AntisymTensor& f_upper, const LorentzMatrix& lambda);

/// Tensor coupling H = -alpha F^{ab} S_{ab} / 2 on one momentum sector.
SectorOperator interaction_hamiltonian(SpinValue s, const OnShellMomentum& p, const EMField& f,
                                       double orientation = +1.0);

/// Equivalent rest-frame form -alpha B^a(P) W_a / m with
/// B_a(P) = (*F)_{ab} P^b / m, the magnetic field seen co-moving.
SectorOperator rest_frame_b_form(SpinValue s, const OnShellMomentum& p, const EMField& f,
                                 double orientation = +1.0);

/// Equivalent lab-frame closed form
/// -alpha [ (E x P).S / m + ((P0/m) S_perp + S_par).B ],
/// with S_par = (S.phat) phat; at P = 0 the split degenerates to
/// S_par = 0, S_perp = S so the expression reduces to -alpha S.B.
SectorOperator lab_frame_form(SpinValue s, const OnShellMomentum& p, const EMField& f);

/**
 * Non-relativistic limit probe: residual(p) = max |H(p) - H_nr(p)| against
 * H_nr = -alpha [ (E x p).S / m + S.B ] over the supplied small spatial
 * momenta. The report's max_residual is the deviation of the fitted
 * log-log scaling exponent from 2 (tolerance = allowed band half-width);
 * per-sample residuals and the extracted linear electric coefficient are
 * carried in the samples/metadata.
 */
CheckReport nr_limit_check(SpinValue s, const EMField& f, double mass,
                           const std::vector<std::array<double, 3>>& momenta,
                           double exponent_band = 0.2);

/// Linear-in-momentum coefficient of the electric coupling, extracted
/// numerically; equals alpha/m, twice the Thomas-corrected value.
double nr_electric_linear_coefficient(SpinValue s, const EMField& f, double mass);

/// Ascending eigenvalues; requires Hermiticity within 1e-9 (NotHermitian).
std::vector<double> spectrum(const SectorOperator& h);

}  // namespace relspin

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "relspin/check_report.hpp"
#include "relspin/sampling.hpp"
#include "relspin/spin_observables.hpp"

namespace relspin {

/**
 * A classical property evaluated relative to an observer: four-velocity v
 * (v.v = -1), hyperplane offset tau, and observation point y. The evaluator
 * returns component_count finite reals; anything non-finite raises
 * NonFiniteEvaluation inside the checks.
 */
struct ClassicalProperty {
    std::string name;
    int component_count = 1;
    std::function<std::vector<double>(const FourVector& v, double tau, const FourVector& y)>
        evaluator;
};

struct ClassicalSample {
    FourVector v;
    double tau = 0.0;
    FourVector y;
};

/**
 * Deterministic sampling specification. When explicit_samples is non-empty
 * it is used verbatim; otherwise `count` points are drawn from a Halton
 * sequence offset by the seed: observer rapidity 3-vectors inside
 * |chi_i| <= rapidity_max, tau and y components inside symmetric boxes.
 */
struct SamplingSpec {
    int count = 32;
    std::uint64_t seed = 1;
    double rapidity_max = 2.0;
    double tau_half_width = 1.0;
    double y_half_width = 1.0;
    std::vector<ClassicalSample> explicit_samples;
};

std::vector<ClassicalSample> generate_classical_samples(const SamplingSpec& spec);

/// Residual of (d/dy^c + v_c v^d d/dy^d) A = 0 by central differences.
CheckReport translation_invariance_check(const ClassicalProperty& a, const SamplingSpec& spec,
                                         double h, double tol);

/// Residual of (d/dv^c + v_c v^d d/dv^d - (y_c - tau v_c) d/dtau) A = 0.
/// Velocity steps stay on the unit hyperboloid: difference directions are
/// projected onto the tangent space at v and the stepped point renormalized.
CheckReport hyperplane_invariance_check(const ClassicalProperty& a, const SamplingSpec& spec,
                                        double h, double tol);

/// Both constraints plus direct variation of A over the sample cloud, which
/// for a property passing both must be constant.
CheckReport intrinsic_check(const ClassicalProperty& a, const SamplingSpec& spec, double h,
                            double tol);

/// A 3-vector-valued candidate property: a four-vector function of the
/// observer velocity constrained by A(v).v = 0.
struct VectorCandidate {
    std::string name;
    std::function<FourVector(const FourVector& v)> fn;
};

/**
 * Falsifier for 3-vector candidates. Fails a candidate when either the
 * invariance residual (finite difference of A along tangent directions) or
 * the contraction |A(v).dv| over tangent directions dv exceeds tol. A pass
 * forces max ||A|| <= tol * kappa (kappa reported in the metadata), i.e.
 * only the null 3-vector survives. Throws OrthogonalityViolated when
 * A(v).v = 0 fails at a sample.
 */
CheckReport threevector_nogo_check(const VectorCandidate& candidate, const SamplingSpec& spec,
                                   double h, double tol);

/// Maps an observer frame to the momentum-indexed operators that observer
/// uses for the property; the guts of the quantum intrinsicality check.
using ObserverFamily = std::function<OperatorFamily(const ObserverFrame&)>;

/**
 * Quantum intrinsicality check: for every transformation L in `boosts`,
 * compare expectation(psi, family(lab)) against
 * expectation(boost_state(L, psi), family(L . lab)). Intrinsic observables
 * give identical values; observer-dependent ones do not.
 */
CheckReport quantum_intrinsicality_check(const ObserverFamily& family,
                                         const MomentumSpinState& psi,
                                         const std::vector<LorentzMatrix>& boosts, double tol);

/// Scalar contraction of the intrinsic spin tensor against fixed tetrad
/// coefficients: each observer applies the same component formula in their
/// own frame, which transports the coefficient tensor covariantly.
ObserverFamily intrinsic_contraction_family(SpinValue s, const AntisymTensor& coeffs);

/// Fixed Wigner spin component (i = 0,1,2): the same matrices in every
/// frame, the canonical non-intrinsic 3-vector candidate.
ObserverFamily wigner_component_family(SpinValue s, int i);

ObserverFamily identity_family(SpinValue s);

}  // namespace relspin

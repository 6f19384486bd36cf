#include "relspin/intrinsicality.hpp"

#include <cmath>
#include <sstream>

namespace relspin {

namespace {

std::vector<double> eval_checked(const ClassicalProperty& a, const FourVector& v, double tau,
                                 const FourVector& y) {
    std::vector<double> out = a.evaluator(v, tau, y);
    if (static_cast<int>(out.size()) != a.component_count)
        throw Error(a.name + ": evaluator returned wrong component count");
    for (double x : out) {
        if (!std::isfinite(x)) {
            std::ostringstream os;
            os << a.name << ": non-finite evaluation at v0 = " << v[0] << ", tau = " << tau;
            throw NonFiniteEvaluation(os.str());
        }
    }
    return out;
}

/// v_c, the lowered observer velocity.
FourVector lowered(const FourVector& v) { return {-v[0], v[1], v[2], v[3]}; }

/// Rescale onto the unit hyperboloid v.v = -1.
FourVector renormalize_velocity(const FourVector& v) {
    const double n = std::sqrt(-minkowski_dot(v, v));
    return v * (1.0 / n);
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

std::vector<std::pair<std::string, std::vector<double>>> sample_inputs(const ClassicalSample& s) {
    return {{"v", {s.v[0], s.v[1], s.v[2], s.v[3]}},
            {"tau", {s.tau}},
            {"y", {s.y[0], s.y[1], s.y[2], s.y[3]}}};
}

}  // namespace

std::vector<ClassicalSample> generate_classical_samples(const SamplingSpec& spec) {
    if (!spec.explicit_samples.empty()) return spec.explicit_samples;
    static constexpr std::uint32_t kBases[8] = {2, 3, 5, 7, 11, 13, 17, 19};
    std::vector<ClassicalSample> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    const std::uint64_t offset = 1 + (spec.seed * 7919) % 1000003;
    for (int n = 0; n < spec.count; ++n) {
        const std::uint64_t idx = offset + static_cast<std::uint64_t>(n);
        double u[8];
        for (int k = 0; k < 8; ++k) u[k] = halton(idx, kBases[k]);

        std::array<double, 3> chi{};
        for (int k = 0; k < 3; ++k) chi[static_cast<std::size_t>(k)] = spec.rapidity_max * (2.0 * u[k] - 1.0);
        const double cn = std::sqrt(chi[0] * chi[0] + chi[1] * chi[1] + chi[2] * chi[2]);
        ClassicalSample s;
        if (cn < 1e-15) {
            s.v = {1.0, 0.0, 0.0, 0.0};
        } else {
            const double sh = std::sinh(cn) / cn;
            s.v = {std::cosh(cn), sh * chi[0], sh * chi[1], sh * chi[2]};
        }
        s.tau = spec.tau_half_width * (2.0 * u[3] - 1.0);
        for (int k = 0; k < 4; ++k) s.y[k] = spec.y_half_width * (2.0 * u[4 + k] - 1.0);
        out.push_back(s);
    }
    return out;
}

CheckReport translation_invariance_check(const ClassicalProperty& a, const SamplingSpec& spec,
                                         double h, double tol) {
    std::vector<SampleRecord> records;
    for (const ClassicalSample& s : generate_classical_samples(spec)) {
        // Central-difference gradient dA/dy^d, one column per direction.
        std::vector<std::vector<double>> grad(4);
        for (int d = 0; d < 4; ++d) {
            FourVector yp = s.y, ym = s.y;
            yp[d] += h;
            ym[d] -= h;
            const auto fp = eval_checked(a, s.v, s.tau, yp);
            const auto fm = eval_checked(a, s.v, s.tau, ym);
            grad[static_cast<std::size_t>(d)].resize(fp.size());
            for (std::size_t k = 0; k < fp.size(); ++k)
                grad[static_cast<std::size_t>(d)][k] = (fp[k] - fm[k]) / (2.0 * h);
        }
        const FourVector vl = lowered(s.v);
        double residual = 0.0;
        for (std::size_t k = 0; k < grad[0].size(); ++k) {
            double along_v = 0.0;
            for (int d = 0; d < 4; ++d) along_v += s.v[d] * grad[static_cast<std::size_t>(d)][k];
            for (int c = 0; c < 4; ++c)
                residual = std::max(residual,
                                    std::abs(grad[static_cast<std::size_t>(c)][k] + vl[c] * along_v));
        }
        records.push_back({sample_inputs(s), residual});
    }
    return make_check_report("translation_invariance:" + a.name, tol, std::move(records),
                             {{"property", a.name}, {"step", std::to_string(h)}});
}

CheckReport hyperplane_invariance_check(const ClassicalProperty& a, const SamplingSpec& spec,
                                        double h, double tol) {
    std::vector<SampleRecord> records;
    for (const ClassicalSample& s : generate_classical_samples(spec)) {
        const FourVector vl = lowered(s.v);

        // dA/dtau by central difference.
        const auto tp = eval_checked(a, s.v, s.tau + h, s.y);
        const auto tm = eval_checked(a, s.v, s.tau - h, s.y);
        std::vector<double> dtau(tp.size());
        for (std::size_t k = 0; k < tp.size(); ++k) dtau[k] = (tp[k] - tm[k]) / (2.0 * h);

        double residual = 0.0;
        for (int c = 0; c < 4; ++c) {
            // Tangent direction u^d = delta_c^d + v_c v^d; orthogonal to v,
            // so stepping along it stays on the hyperboloid to second order.
            FourVector u = s.v * vl[c];
            u[c] += 1.0;
            const FourVector vp = renormalize_velocity(s.v + u * h);
            const FourVector vm = renormalize_velocity(s.v - u * h);
            const auto fp = eval_checked(a, vp, s.tau, s.y);
            const auto fm = eval_checked(a, vm, s.tau, s.y);
            const double ycoef = (s.y[c] * (c == 0 ? -1.0 : 1.0)) - s.tau * vl[c];  // y_c - tau v_c
            for (std::size_t k = 0; k < fp.size(); ++k) {
                const double dv = (fp[k] - fm[k]) / (2.0 * h);
                residual = std::max(residual, std::abs(dv - ycoef * dtau[k]));
            }
        }
        records.push_back({sample_inputs(s), residual});
    }
    return make_check_report("hyperplane_invariance:" + a.name, tol, std::move(records),
                             {{"property", a.name}, {"step", std::to_string(h)}});
}

CheckReport intrinsic_check(const ClassicalProperty& a, const SamplingSpec& spec, double h,
                            double tol) {
    const CheckReport trans = translation_invariance_check(a, spec, h, tol);
    const CheckReport hyper = hyperplane_invariance_check(a, spec, h, tol);

    const std::vector<ClassicalSample> samples = generate_classical_samples(spec);
    std::vector<double> reference;
    double spread = 0.0;
    std::vector<SampleRecord> records;
    for (std::size_t n = 0; n < samples.size(); ++n) {
        const auto val = eval_checked(a, samples[n].v, samples[n].tau, samples[n].y);
        if (n == 0) reference = val;
        const double dev = max_abs_diff(val, reference);
        spread = std::max(spread, dev);
        double residual = dev;
        if (n < trans.samples.size()) residual = std::max(residual, trans.samples[n].residual);
        if (n < hyper.samples.size()) residual = std::max(residual, hyper.samples[n].residual);
        records.push_back({sample_inputs(samples[n]), residual});
    }

    std::string failed = "none";
    if (trans.max_residual > tol)
        failed = "translation";
    else if (hyper.max_residual > tol)
        failed = "hyperplane";
    else if (spread > tol)
        failed = "variation";

    std::ostringstream t1, t2, t3;
    t1 << trans.max_residual;
    t2 << hyper.max_residual;
    t3 << spread;
    return make_check_report("intrinsic:" + a.name, tol, std::move(records),
                             {{"property", a.name},
                              {"translation_max_residual", t1.str()},
                              {"hyperplane_max_residual", t2.str()},
                              {"variation_spread", t3.str()},
                              {"failed_stage", failed}});
}

CheckReport threevector_nogo_check(const VectorCandidate& candidate, const SamplingSpec& spec,
                                   double h, double tol) {
    std::vector<SampleRecord> records;
    double kappa = 0.0;
    double max_norm = 0.0;
    for (const ClassicalSample& s : generate_classical_samples(spec)) {
        const FourVector v = s.v;
        const FourVector av = candidate.fn(v);
        const double orth = std::abs(minkowski_dot(av, v));
        if (orth > 1e-9 * std::max(1.0, max_abs(av))) {
            std::ostringstream os;
            os << candidate.name << ": A(v).v = " << orth << " at v0 = " << v[0];
            throw OrthogonalityViolated(os.str());
        }
        max_norm = std::max(max_norm, max_abs(av));

        // Orthonormal tangent triad at v: the boosted spatial axes.
        const LorentzMatrix lv = standard_boost(v, 1.0);
        std::array<FourVector, 3> triad;
        double leg_sup = 0.0;
        for (int i = 0; i < 3; ++i) {
            FourVector e{0.0, 0.0, 0.0, 0.0};
            e[i + 1] = 1.0;
            triad[static_cast<std::size_t>(i)] = lv.apply(e);
            leg_sup = std::max(leg_sup, max_abs(triad[static_cast<std::size_t>(i)]));
        }
        kappa = std::max(kappa, 3.0 * leg_sup);

        double residual = 0.0;
        for (const FourVector& dv : triad) {
            // Invariance of the structure itself along the hyperboloid.
            const FourVector ap = candidate.fn(renormalize_velocity(v + dv * h));
            const FourVector am = candidate.fn(renormalize_velocity(v - dv * h));
            residual = std::max(residual, max_abs(ap - am) / (2.0 * h));
            // The forced contraction A(v).dv = 0.
            residual = std::max(residual, std::abs(minkowski_dot(av, dv)));
        }
        records.push_back({{{"v", {v[0], v[1], v[2], v[3]}}}, residual});
    }

    std::ostringstream kn, mn;
    kn << kappa;
    mn << max_norm;
    return make_check_report("threevector_nogo:" + candidate.name, tol, std::move(records),
                             {{"candidate", candidate.name},
                              {"kappa", kn.str()},
                              {"max_candidate_norm", mn.str()}});
}

CheckReport quantum_intrinsicality_check(const ObserverFamily& family,
                                         const MomentumSpinState& psi,
                                         const std::vector<LorentzMatrix>& boosts, double tol) {
    const ObserverFrame lab = ObserverFrame::lab();
    const Complex lhs = expectation(psi, family(lab));
    std::vector<SampleRecord> records;
    for (std::size_t n = 0; n < boosts.size(); ++n) {
        const MomentumSpinState moved = boost_state(boosts[n], psi);
        const Complex rhs = expectation(moved, family(lab.transformed(boosts[n])));
        records.push_back({{{"boost_index", {static_cast<double>(n)}},
                            {"lhs", {lhs.real(), lhs.imag()}},
                            {"rhs", {rhs.real(), rhs.imag()}}},
                           std::abs(lhs - rhs)});
    }
    return make_check_report("quantum_intrinsicality", tol, std::move(records));
}

ObserverFamily intrinsic_contraction_family(SpinValue s, const AntisymTensor& coeffs) {
    return [s, coeffs](const ObserverFrame& frame) {
        return OperatorFamily::from_function([s, coeffs, frame](const OnShellMomentum& p) {
            const SpinTensorOp tensor = intrinsic_spin_tensor(s, p);
            const int d = tensor.dimension();

            // Co-basis one-forms of the tetrad: f(0) = -eta v, f(i) = eta e_i.
            std::array<FourVector, 4> f;
            f[0] = {frame.velocity()[0], -frame.velocity()[1], -frame.velocity()[2],
                    -frame.velocity()[3]};
            for (int i = 0; i < 3; ++i)
                f[static_cast<std::size_t>(i + 1)] = {-frame.axis(i)[0], frame.axis(i)[1],
                                                      frame.axis(i)[2], frame.axis(i)[3]};

            CMatrix acc = CMatrix::Zero(d, d);
            for (int alpha = 0; alpha < 4; ++alpha) {
                for (int beta = alpha + 1; beta < 4; ++beta) {
                    const double c = coeffs(alpha, beta);
                    if (c == 0.0) continue;
                    CMatrix comp = CMatrix::Zero(d, d);
                    for (int mu = 0; mu < 4; ++mu)
                        for (int nu = 0; nu < 4; ++nu)
                            if (mu != nu)
                                comp += f[static_cast<std::size_t>(alpha)][mu] *
                                        f[static_cast<std::size_t>(beta)][nu] * tensor.upper(mu, nu);
                    acc += 2.0 * c * comp;
                }
            }
            return acc;
        });
    };
}

ObserverFamily wigner_component_family(SpinValue s, int i) {
    const SpinMatrices spin = angular_momentum_matrices(s);
    const CMatrix m = spin[i];
    return [m](const ObserverFrame&) {
        return OperatorFamily::from_function([m](const OnShellMomentum&) { return m; });
    };
}

ObserverFamily identity_family(SpinValue s) {
    const int d = s.dimension();
    return [d](const ObserverFrame&) {
        return OperatorFamily::from_function(
            [d](const OnShellMomentum&) { return CMatrix::Identity(d, d); });
    };
}

}  // namespace relspin

#include "verify_suite.hpp"

#include <cmath>
#include <sstream>

#include "relspin/intrinsicality.hpp"
#include "relspin/report_io.hpp"
#include "relspin/sampling.hpp"

namespace relspin::cli {

namespace {

constexpr double kPinnedWitnessGap = 0.04361550439899575;  // transverse rapidity-1 on rapidity-1
constexpr double kPinnedSu2Gap = 0.5;                      // lab-frame algebra defect at p = (sqrt2,1,0,0)

const FourVector kFoilVector{0.3, 1.0, -0.5, 0.2};

ClassicalProperty constant_property() {
    return {"constant", 1,
            [](const FourVector&, double, const FourVector&) { return std::vector<double>{1.0}; }};
}

ClassicalProperty mass_property() {
    return {"mass", 1,
            [](const FourVector&, double, const FourVector&) { return std::vector<double>{1.25}; }};
}

ClassicalProperty smooth_property() {
    return {"sin_vy", 1, [](const FourVector& v, double, const FourVector& y) {
                return std::vector<double>{std::sin(0.3 * minkowski_dot(v, y))};
            }};
}

ClassicalProperty wedge_property() {
    return {"y_wedge_k", 6, [](const FourVector&, double, const FourVector& y) {
                std::vector<double> out;
                for (int a = 0; a < 4; ++a)
                    for (int b = a + 1; b < 4; ++b)
                        out.push_back(y[a] * kFoilVector[b] - y[b] * kFoilVector[a]);
                return out;
            }};
}

double wedge_translation_residual(const FourVector& v) {
    const FourVector vl{-v[0], v[1], v[2], v[3]};
    double worst = 0.0;
    for (int c = 0; c < 4; ++c)
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                const double dady =
                    (a == c ? kFoilVector[b] : 0.0) - (b == c ? kFoilVector[a] : 0.0);
                const double along = v[a] * kFoilVector[b] - v[b] * kFoilVector[a];
                worst = std::max(worst, std::abs(dady + vl[c] * along));
            }
    return worst;
}

double hyperplane_velocity_residual(const FourVector& v) {
    const FourVector vl{-v[0], v[1], v[2], v[3]};
    const FourVector kl{-kFoilVector[0], kFoilVector[1], kFoilVector[2], kFoilVector[3]};
    const double vdotk = minkowski_dot(v, kFoilVector);
    double worst = 0.0;
    for (int c = 0; c < 4; ++c) worst = std::max(worst, std::abs(kl[c] + vl[c] * vdotk));
    return worst;
}

std::string fmt(double x) { return format_double(x); }

/// Report whose residual measures how far `value` falls short of `floor`;
/// zero (pass) once the measured separation is at least the floor.
CheckReport deficit_report(const std::string& name, double value, double floor,
                           std::vector<std::pair<std::string, std::string>> metadata) {
    const double deficit = value >= floor ? 0.0 : (floor - value) / floor;
    metadata.emplace_back("measured", fmt(value));
    metadata.emplace_back("required_floor", fmt(floor));
    SampleRecord rec;
    rec.inputs = {{"measured", {value}}, {"floor", {floor}}};
    rec.residual = deficit;
    return make_check_report(name, 0.0, {rec}, std::move(metadata));
}

/// Rename a library report for the suite listing.
CheckReport renamed(CheckReport r, const std::string& name) {
    r.check = name;
    return r;
}

CheckReport relative_deviation_report(const std::string& name, const CheckReport& measured,
                                      const std::vector<double>& exact, double band) {
    std::vector<SampleRecord> records;
    for (std::size_t i = 0; i < measured.samples.size(); ++i) {
        const double rel =
            std::abs(measured.samples[i].residual - exact[i]) / std::max(1e-300, exact[i]);
        SampleRecord rec;
        rec.inputs = {{"measured", {measured.samples[i].residual}}, {"exact", {exact[i]}}};
        rec.residual = rel;
        records.push_back(rec);
    }
    return make_check_report(name, band, std::move(records));
}

}  // namespace

std::vector<CheckReport> run_verify_suite(const Scenario& sc, double field_orientation) {
    std::vector<CheckReport> out;
    const double h = sc.tolerance("fd_step", 1e-4);
    const double classical_tol = sc.tolerance("classical", 1e-6);
    const double quantum_tol = sc.tolerance("quantum", 1e-9);
    const double casimir_tol = sc.tolerance("casimir", 1e-9);
    const double identity_tol = sc.tolerance("tensor_identity", 1e-9);
    const double covariance_tol = sc.tolerance("covariance", 1e-9);
    const double closed_form_tol = sc.tolerance("closed_form", 1e-10);
    const double su2_tol = sc.tolerance("su2", 1e-10);
    const double roundtrip_tol = sc.tolerance("roundtrip", 1e-9);
    const double em_tol = sc.tolerance("em_equivalence", 1e-9);
    const double em_frame_tol = sc.tolerance("em_frame", 1e-9);
    const double falsifier_band = sc.tolerance("falsifier_band", 0.1);
    const double witness_tol = sc.tolerance("witness", 1e-9);

    SamplingSpec spec;
    spec.count = 32;
    spec.seed = sc.seed;

    // --- classical translation constraint -------------------------------
    out.push_back(renamed(translation_invariance_check(constant_property(), spec, h, classical_tol),
                          "classical_translation_constant"));
    out.push_back(renamed(translation_invariance_check(mass_property(), spec, h, classical_tol),
                          "classical_translation_mass"));

    SamplingSpec smooth_spec = spec;
    smooth_spec.rapidity_max = 1.2;
    out.push_back(
        renamed(translation_invariance_check(smooth_property(), smooth_spec, h, classical_tol),
                "classical_translation_smooth"));

    {
        const auto samples = generate_classical_samples(spec);
        std::vector<double> exact;
        for (const auto& s : samples) exact.push_back(wedge_translation_residual(s.v));
        const CheckReport measured =
            translation_invariance_check(wedge_property(), spec, h, classical_tol);
        out.push_back(relative_deviation_report("classical_translation_orbital_foil", measured,
                                                exact, falsifier_band));
    }

    {
        const CheckReport r1 =
            translation_invariance_check(smooth_property(), smooth_spec, h, classical_tol);
        const CheckReport r2 =
            translation_invariance_check(smooth_property(), smooth_spec, h / 2.0, classical_tol);
        const double ratio = r1.max_residual / std::max(1e-300, r2.max_residual);
        const double miss = std::max(0.0, std::max(3.0 - ratio, ratio - 5.0));
        SampleRecord rec;
        rec.inputs = {{"residual_h", {r1.max_residual}},
                      {"residual_h_half", {r2.max_residual}},
                      {"ratio", {ratio}}};
        rec.residual = miss;
        out.push_back(make_check_report("classical_fd_convergence", 0.0, {rec},
                                        {{"ratio", fmt(ratio)}}));
    }

    // --- classical hyperplane constraint --------------------------------
    out.push_back(renamed(hyperplane_invariance_check(constant_property(), spec, h, classical_tol),
                          "classical_hyperplane_constant"));
    out.push_back(renamed(hyperplane_invariance_check(mass_property(), spec, h, classical_tol),
                          "classical_hyperplane_mass"));
    {
        ClassicalProperty of_y{"g_yy", 1, [](const FourVector&, double, const FourVector& y) {
                                   return std::vector<double>{std::exp(0.3 * minkowski_dot(y, y))};
                               }};
        out.push_back(renamed(hyperplane_invariance_check(of_y, spec, h, classical_tol),
                              "classical_hyperplane_point_scalar"));
    }
    {
        ClassicalProperty vk{"v_k", 1, [](const FourVector& v, double, const FourVector&) {
                                 return std::vector<double>{minkowski_dot(v, kFoilVector)};
                             }};
        const auto samples = generate_classical_samples(spec);
        std::vector<double> exact;
        for (const auto& s : samples) exact.push_back(hyperplane_velocity_residual(s.v));
        const CheckReport measured = hyperplane_invariance_check(vk, spec, h, classical_tol);
        out.push_back(relative_deviation_report("classical_hyperplane_velocity_foil", measured,
                                                exact, falsifier_band));
    }

    // --- combined intrinsicality ----------------------------------------
    out.push_back(
        renamed(intrinsic_check(mass_property(), spec, h, classical_tol), "intrinsic_mass_scalar"));
    {
        ClassicalProperty energy{"v0", 1, [](const FourVector& v, double, const FourVector&) {
                                     return std::vector<double>{v[0]};
                                 }};
        const CheckReport r = intrinsic_check(energy, spec, h, classical_tol);
        double spread = 0.0;
        for (const auto& [k, v] : r.metadata)
            if (k == "variation_spread") spread = std::stod(v);
        out.push_back(deficit_report("intrinsic_energy_foil", spread, 0.1,
                                     {{"variation_spread", fmt(spread)}}));
    }

    // --- three-vector no-go ----------------------------------------------
    {
        const VectorCandidate zero{"zero",
                                   [](const FourVector&) { return FourVector{0, 0, 0, 0}; }};
        out.push_back(
            renamed(threevector_nogo_check(zero, spec, h, classical_tol), "nogo_null_candidate"));
    }
    {
        const VectorCandidate proj{"projected_k", [](const FourVector& v) {
                                       return kFoilVector + v * minkowski_dot(kFoilVector, v);
                                   }};
        const CheckReport r = threevector_nogo_check(proj, spec, h, classical_tol);
        out.push_back(deficit_report("nogo_projected_candidate", r.max_residual, 0.05,
                                     {{"max_residual", fmt(r.max_residual)}}));
    }
    {
        // Constant spacelike candidate over observers orthogonal to it.
        const VectorCandidate cand{"constant_k",
                                   [](const FourVector&) { return FourVector{0, 0, 0, 1}; }};
        SamplingSpec restricted;
        restricted.explicit_samples = {
            {{1, 0, 0, 0}, 0.0, {0, 0, 0, 0}},
            {{std::cosh(0.7), std::sinh(0.7), 0, 0}, 0.0, {0, 0, 0, 0}},
            {{std::cosh(1.2), std::sinh(1.2) * 0.6, std::sinh(1.2) * 0.8, 0}, 0.0, {0, 0, 0, 0}}};
        const CheckReport r = threevector_nogo_check(cand, restricted, h, classical_tol);
        out.push_back(deficit_report("nogo_constant_candidate", r.max_residual, 0.05,
                                     {{"max_residual", fmt(r.max_residual)}}));
    }

    // --- quantum intrinsicality ------------------------------------------
    std::vector<LorentzMatrix> transforms;
    for (const auto& t : sc.transforms) transforms.push_back(t.build());
    if (transforms.empty()) transforms.push_back(LorentzMatrix::boost({0, 1, 0}, 1.0));

    {
        RandomStream rng(sc.seed ^ 0x51a7eULL);
        std::vector<SampleRecord> records;
        for (std::size_t si = 0; si < sc.states.size(); ++si) {
            const MomentumSpinState psi = sc.build_state(sc.states[si]);
            for (int n = 0; n < 3; ++n) {
                AntisymTensor coeffs;
                for (auto& c : coeffs.comp) c = rng.uniform(-1.0, 1.0);
                const CheckReport r = quantum_intrinsicality_check(
                    intrinsic_contraction_family(sc.spin, coeffs), psi, transforms, quantum_tol);
                for (std::size_t b = 0; b < r.samples.size(); ++b) {
                    SampleRecord rec;
                    rec.inputs = {{"state", {static_cast<double>(si)}},
                                  {"coeff_draw", {static_cast<double>(n)}},
                                  {"transform", {static_cast<double>(b)}}};
                    rec.residual = r.samples[b].residual;
                    records.push_back(rec);
                }
            }
        }
        out.push_back(
            make_check_report("quantum_intrinsic_contraction", quantum_tol, std::move(records)));
    }
    {
        const CheckReport r = quantum_intrinsicality_check(
            identity_family(sc.spin), sc.build_state(sc.states.front()), transforms, 1e-12);
        out.push_back(renamed(r, "quantum_identity_family"));
    }
    {
        // Pinned witness: spin-1/2 z-polarized sector at rapidity 1 meets a
        // transverse rapidity-1 boost; the fixed Wigner z-component family
        // must miss by the frozen little-group gap.
        CVector up(2);
        up << 1.0, 0.0;
        const MomentumSpinState witness =
            MomentumSpinState::single({1}, OnShellMomentum(1.0, {0.0, 0.0, std::sinh(1.0)}), up);
        const std::vector<LorentzMatrix> yboost = {LorentzMatrix::boost({0, 1, 0}, 1.0)};
        const CheckReport r =
            quantum_intrinsicality_check(wigner_component_family({1}, 2), witness, yboost, 1e-9);
        SampleRecord rec;
        rec.inputs = {{"gap", {r.max_residual}}, {"pinned", {kPinnedWitnessGap}}};
        rec.residual = std::abs(r.max_residual - kPinnedWitnessGap);
        out.push_back(make_check_report("quantum_wigner_sz_witness", witness_tol, {rec},
                                        {{"gap", fmt(r.max_residual)},
                                         {"pinned_gap", fmt(kPinnedWitnessGap)},
                                         {"nogo_floor", fmt(0.01)}}));
    }

    // --- Poincare casimir and tensor identity sweeps ----------------------
    {
        RandomStream rng(sc.seed ^ 0xca51ULL);
        std::vector<SampleRecord> records;
        for (int twice_s : {1, 2, 3, 4}) {
            const SpinValue s{twice_s};
            const int d = s.dimension();
            for (int n = 0; n < 50; ++n) {
                const OnShellMomentum p = rng.random_momentum(sc.mass, 10.0 * sc.mass);
                const auto w = pauli_lubanski(s, p);
                const FourVector pv = p.four_vector();
                CMatrix wp = -w[0].matrix * pv[0];
                for (int i = 1; i < 4; ++i) wp += w[i].matrix * pv[i];
                CMatrix w2 = -w[0].matrix * w[0].matrix;
                for (int i = 1; i < 4; ++i) w2 += w[i].matrix * w[i].matrix;
                const double want = sc.mass * sc.mass * s.casimir();
                const double scale = std::max(1.0, want);
                double res = max_abs(wp) / scale;
                res = std::max(res, max_abs(w2 - want * CMatrix::Identity(d, d)) / scale);
                SampleRecord rec;
                rec.inputs = {{"twice_s", {static_cast<double>(twice_s)}},
                              {"index", {static_cast<double>(n)}}};
                rec.residual = res;
                records.push_back(rec);
            }
        }
        out.push_back(make_check_report("poincare_casimir", casimir_tol, std::move(records)));
    }
    {
        RandomStream rng(sc.seed ^ 0x7e45ULL);
        std::vector<SampleRecord> records;
        for (int twice_s : {1, 2, 3, 4}) {
            const SpinValue s{twice_s};
            const int d = s.dimension();
            for (int n = 0; n < 50; ++n) {
                const OnShellMomentum p = rng.random_momentum(sc.mass, 10.0 * sc.mass);
                const SpinTensorOp t = intrinsic_spin_tensor(s, p);
                const FourVector pv = p.four_vector();
                const auto w = pauli_lubanski_lower(s, p);
                const double scale = std::max(1.0, sc.mass * sc.mass * s.casimir());

                double res = 0.0;
                const auto contracted = t.contract(pv);
                for (const auto& c : contracted) res = std::max(res, max_abs(c) / scale);
                const auto dual = t.dual_contract(pv);
                for (int a = 0; a < 4; ++a)
                    res = std::max(res, max_abs(dual[a] - w[a]) / scale);
                res = std::max(
                    res, max_abs(t.norm_operator() - s.casimir() * CMatrix::Identity(d, d)) /
                             std::max(1.0, s.casimir()));
                SampleRecord rec;
                rec.inputs = {{"twice_s", {static_cast<double>(twice_s)}},
                              {"index", {static_cast<double>(n)}}};
                rec.residual = res;
                records.push_back(rec);
            }
        }
        out.push_back(make_check_report("tensor_identities", identity_tol, std::move(records)));
    }
    {
        RandomStream rng(sc.seed ^ 0xc0faULL);
        std::vector<SampleRecord> records;
        for (int n = 0; n < 100; ++n) {
            const int twice_s = 1 + static_cast<int>(rng.uniform() * 3.0);
            const SpinValue s{std::min(twice_s, 3)};
            const OnShellMomentum p = rng.random_momentum(sc.mass, 3.0 * sc.mass);
            const LorentzMatrix l = rng.random_lorentz(1.5);
            const OnShellMomentum q =
                OnShellMomentum::from_four_vector(l.apply(p.four_vector()), sc.mass);
            const CMatrix dmat = rotation_rep(s, wigner_rotation(l, p.four_vector(), sc.mass));
            const SpinTensorOp tp = intrinsic_spin_tensor(s, p);
            const SpinTensorOp tq = intrinsic_spin_tensor(s, q);
            double res = 0.0;
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = mu + 1; nu < 4; ++nu) {
                    CMatrix rhs = CMatrix::Zero(s.dimension(), s.dimension());
                    for (int r = 0; r < 4; ++r)
                        for (int c = 0; c < 4; ++c)
                            if (r != c)
                                rhs += l.matrix()(mu, r) * l.matrix()(nu, c) * tp.upper(r, c);
                    res = std::max(res, max_abs(dmat.adjoint() * tq.upper(mu, nu) * dmat - rhs));
                }
            SampleRecord rec;
            rec.inputs = {{"index", {static_cast<double>(n)}},
                          {"twice_s", {static_cast<double>(s.twice_s)}}};
            rec.residual = res;
            records.push_back(rec);
        }
        out.push_back(make_check_report("tensor_covariance", covariance_tol, std::move(records)));
    }

    // --- observer decomposition ------------------------------------------
    {
        RandomStream rng(sc.seed ^ 0x516aULL);
        const ObserverFrame lab = ObserverFrame::lab();
        std::vector<SampleRecord> records;
        for (int n = 0; n < 50; ++n) {
            const OnShellMomentum p = rng.random_momentum(sc.mass, 5.0 * sc.mass);
            const auto sig = sigma_vector(intrinsic_spin_tensor(sc.spin, p), lab);
            double res = 0.0;
            for (int i = 0; i < 3; ++i)
                res = std::max(res, max_abs(sig[static_cast<std::size_t>(i)].matrix -
                                            sigma_closed_form(sc.spin, p, i)));
            SampleRecord rec;
            rec.inputs = {{"index", {static_cast<double>(n)}}};
            rec.residual = res;
            records.push_back(rec);
        }
        out.push_back(make_check_report("sigma_closed_form", closed_form_tol, std::move(records)));
    }
    {
        RandomStream rng(sc.seed ^ 0x0035ULL);
        std::vector<SampleRecord> records;
        for (int n = 0; n < 50; ++n) {
            const OnShellMomentum p = rng.random_momentum(sc.mass, 5.0 * sc.mass);
            const SpinTensorOp t = intrinsic_spin_tensor(sc.spin, p);
            const ObserverFrame frame = ObserverFrame::comoving(p);
            double res = su2_defect(sigma_vector(t, frame));
            for (const auto& m : mass_moment(t, frame)) res = std::max(res, max_abs(m.matrix));
            SampleRecord rec;
            rec.inputs = {{"index", {static_cast<double>(n)}}};
            rec.residual = res;
            records.push_back(rec);
        }
        out.push_back(make_check_report("sigma_comoving_su2", su2_tol, std::move(records)));
    }
    {
        // Lab-frame algebra defect at the pinned momentum, frozen before
        // the build: the transverse components close onto twice the
        // longitudinal one, leaving a gap of exactly 1/2 for spin 1/2.
        const auto sig = sigma_vector(
            intrinsic_spin_tensor({1}, OnShellMomentum(1.0, {1.0, 0.0, 0.0})), ObserverFrame::lab());
        const double gap = su2_defect(sig);
        SampleRecord rec;
        rec.inputs = {{"gap", {gap}}, {"pinned", {kPinnedSu2Gap}}};
        rec.residual = std::abs(gap - kPinnedSu2Gap);
        out.push_back(make_check_report("sigma_lab_su2_gap", witness_tol, {rec},
                                        {{"gap", fmt(gap)}, {"nogo_floor", fmt(0.1)}}));
    }
    {
        RandomStream rng(sc.seed ^ 0x4ec0ULL);
        std::vector<SampleRecord> records;
        for (int n = 0; n < 50; ++n) {
            const OnShellMomentum p = rng.random_momentum(sc.mass, 5.0 * sc.mass);
            const SpinTensorOp t = intrinsic_spin_tensor(sc.spin, p);
            const ObserverFrame frame = ObserverFrame::lab().transformed(rng.random_lorentz(1.5));
            const SpinTensorOp back =
                reconstruct_tensor(sigma_vector(t, frame), mass_moment(t, frame), frame);
            double res = 0.0;
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b)
                    res = std::max(res, max_abs(back.upper(a, b) - t.upper(a, b)));
            SampleRecord rec;
            rec.inputs = {{"index", {static_cast<double>(n)}}};
            rec.residual = res;
            records.push_back(rec);
        }
        out.push_back(make_check_report("tensor_reconstruction", roundtrip_tol, std::move(records)));
    }

    // --- electromagnetic coupling ------------------------------------------
    const EMField field = sc.field.value_or(EMField{{0.3, 0.0, 0.2}, {0.1, 0.2, 0.7}, 1.0});
    {
        RandomStream rng(sc.seed ^ 0xe3f0ULL);
        std::vector<SampleRecord> records;
        for (int n = 0; n < 100; ++n) {
            const int twice_s = 1 + static_cast<int>(rng.uniform() * 3.0);
            const SpinValue s{std::min(twice_s, 3)};
            const OnShellMomentum p = rng.random_momentum(sc.mass, 5.0 * sc.mass);
            EMField f;
            for (int i = 0; i < 3; ++i) {
                f.electric[static_cast<std::size_t>(i)] = rng.uniform(-1.0, 1.0);
                f.magnetic[static_cast<std::size_t>(i)] = rng.uniform(-1.0, 1.0);
            }
            f.alpha = field.alpha;
            const CMatrix h22 = interaction_hamiltonian(s, p, f, field_orientation).matrix;
            const CMatrix hrest = rest_frame_b_form(s, p, f, field_orientation).matrix;
            const CMatrix hlab = lab_frame_form(s, p, f).matrix;
            const double res =
                std::max({max_abs(h22 - hrest), max_abs(h22 - hlab), max_abs(hrest - hlab)});
            SampleRecord rec;
            rec.inputs = {{"index", {static_cast<double>(n)}},
                          {"twice_s", {static_cast<double>(s.twice_s)}}};
            rec.residual = res;
            records.push_back(rec);
        }
        out.push_back(make_check_report("em_three_form_equivalence", em_tol, std::move(records)));
    }
    {
        RandomStream rng(sc.seed ^ 0xf4aeULL);
        std::vector<SampleRecord> records;
        for (int n = 0; n < 50; ++n) {
            const OnShellMomentum p = rng.random_momentum(sc.mass, 2.0 * sc.mass);
            CVector amp(sc.spin.dimension());
            for (int k = 0; k < sc.spin.dimension(); ++k)
                amp(k) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            const MomentumSpinState psi = MomentumSpinState::single(sc.spin, p, amp);
            const LorentzMatrix l = rng.random_lorentz(1.2);

            const Complex lhs = expectation(
                psi, OperatorFamily::from_function([&](const OnShellMomentum& q) {
                    return interaction_hamiltonian(sc.spin, q, field, field_orientation).matrix;
                }));
            const MomentumSpinState moved = boost_state(l, psi);
            const AntisymTensor ft = transform_field_tensor(field_tensor(field, field_orientation), l);
            const Complex rhs =
                expectation(moved, OperatorFamily::from_function([&](const OnShellMomentum& q) {
                    const SpinTensorOp st = intrinsic_spin_tensor(sc.spin, q);
                    CMatrix acc = CMatrix::Zero(sc.spin.dimension(), sc.spin.dimension());
                    for (int a = 0; a < 4; ++a)
                        for (int b = a + 1; b < 4; ++b) acc += ft(a, b) * st.lower(a, b);
                    return CMatrix(-field.alpha * acc);
                }));
            SampleRecord rec;
            rec.inputs = {{"index", {static_cast<double>(n)}}};
            rec.residual = std::abs(lhs - rhs);
            records.push_back(rec);
        }
        out.push_back(make_check_report("em_frame_consistency", em_frame_tol, std::move(records)));
    }
    {
        std::vector<std::array<double, 3>> momenta;
        for (double scale : {1e-3, 3e-3, 1e-2, 3e-2})
            momenta.push_back({scale * sc.mass, 0.0, 0.0});
        CheckReport r = nr_limit_check(sc.spin, field, sc.mass, momenta,
                                       sc.tolerance("nr_exponent_band", 0.2));
        r.check = "em_nr_scaling";
        out.push_back(std::move(r));
    }
    {
        const double coeff = nr_electric_linear_coefficient(sc.spin, field, sc.mass);
        const double expected = field.alpha / sc.mass;
        const double rel = std::abs(coeff - expected) / expected;
        SampleRecord rec;
        rec.inputs = {{"coefficient", {coeff}}, {"expected", {expected}}};
        rec.residual = rel;
        out.push_back(make_check_report("em_nr_electric_coefficient",
                                        sc.tolerance("nr_coefficient_band", 0.01), {rec},
                                        {{"coefficient", fmt(coeff)},
                                         {"expected_alpha_over_m", fmt(expected)},
                                         {"thomas_corrected_ratio", fmt(coeff * 2.0 * sc.mass /
                                                                        field.alpha)}}));
    }

    return out;
}

}  // namespace relspin::cli

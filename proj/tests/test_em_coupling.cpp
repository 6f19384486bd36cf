#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "relspin/em_coupling.hpp"
#include "relspin/sampling.hpp"

using namespace relspin;

namespace {

EMField random_field(RandomStream& rng) {
    EMField f;
    for (int i = 0; i < 3; ++i) {
        f.electric[static_cast<std::size_t>(i)] = rng.uniform(-1.0, 1.0);
        f.magnetic[static_cast<std::size_t>(i)] = rng.uniform(-1.0, 1.0);
    }
    f.alpha = rng.uniform(0.2, 2.0);
    return f;
}

double lorentz_scalar(const AntisymTensor& f_upper) {
    double acc = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const double low = (a == 0 ? -1.0 : 1.0) * (b == 0 ? -1.0 : 1.0) * f_upper(a, b);
            acc += low * f_upper(a, b);
        }
    return acc;
}

double pseudo_scalar(const AntisymTensor& f_upper) {
    double acc = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) acc += hodge_dual(f_upper)(a, b) * f_upper(a, b);
    return acc;
}

}  // namespace

TEST_CASE("field tensor component conventions") {
    {
        const AntisymTensor f = field_tensor({{0, 0, 0}, {0, 0, 0}, 1.0});
        for (double c : f.comp) CHECK(c == 0.0);
    }
    {
        const double b = 0.7;
        const AntisymTensor f = field_tensor({{0, 0, 0}, {0, 0, b}, 1.0});
        CHECK(f(1, 2) == doctest::Approx(b));
        CHECK(f(2, 1) == doctest::Approx(-b));
        CHECK(f(0, 1) == 0.0);
        CHECK(f(0, 2) == 0.0);
        CHECK(f(0, 3) == 0.0);
        CHECK(f(1, 3) == 0.0);
        CHECK(f(2, 3) == 0.0);
    }
    {
        const double e = 1.3;
        const AntisymTensor f = field_tensor({{e, 0, 0}, {0, 0, 0}, 1.0});
        CHECK(std::abs(f(0, 1)) == doctest::Approx(e));
        CHECK(f(0, 2) == 0.0);
        CHECK(f(0, 3) == 0.0);
        CHECK(f(1, 2) == 0.0);
        CHECK(f(1, 3) == 0.0);
        CHECK(f(2, 3) == 0.0);
    }
}

TEST_CASE("field tensor invariants") {
    RandomStream rng(606);
    for (int n = 0; n < 25; ++n) {
        const EMField f = random_field(rng);
        const AntisymTensor t = field_tensor(f);
        const double e2 = f.electric[0] * f.electric[0] + f.electric[1] * f.electric[1] +
                          f.electric[2] * f.electric[2];
        const double b2 = f.magnetic[0] * f.magnetic[0] + f.magnetic[1] * f.magnetic[1] +
                          f.magnetic[2] * f.magnetic[2];
        const double eb = f.electric[0] * f.magnetic[0] + f.electric[1] * f.magnetic[1] +
                          f.electric[2] * f.magnetic[2];
        CHECK(lorentz_scalar(t) == doctest::Approx(2.0 * (b2 - e2)).epsilon(1e-12));
        CHECK(pseudo_scalar(t) == doctest::Approx(-4.0 * eb).epsilon(1e-12));
        // Both scalars are boost invariant.
        const AntisymTensor moved = transform_field_tensor(t, rng.random_lorentz(1.5));
        CHECK(lorentz_scalar(moved) == doctest::Approx(2.0 * (b2 - e2)).epsilon(1e-10));
        CHECK(pseudo_scalar(moved) == doctest::Approx(-4.0 * eb).epsilon(1e-10));
    }
}

TEST_CASE("interaction hamiltonian pins") {
    const SpinValue s{1};
    const SpinMatrices spin = angular_momentum_matrices(s);

    // Rest, pure magnetic field: the usual -alpha B.S coupling.
    {
        const double b = 0.9, alpha = 1.4;
        const auto h = interaction_hamiltonian(s, OnShellMomentum::rest(1.0),
                                               {{0, 0, 0}, {0, 0, b}, alpha});
        CHECK(max_abs(h.matrix + alpha * b * spin.z) <= 1e-12);
        const auto eigs = spectrum(h);
        CHECK(eigs[0] == doctest::Approx(-alpha * b / 2));
        CHECK(eigs[1] == doctest::Approx(alpha * b / 2));
    }

    // Zero field.
    {
        const auto h =
            interaction_hamiltonian(s, OnShellMomentum(1.0, {0.3, 0.1, 0.0}), {{0, 0, 0}, {0, 0, 0}, 1.0});
        CHECK(max_abs(h.matrix) <= 1e-12);
    }

    // Moving sector, pure electric field: exactly the (E x P).S / m coupling.
    {
        const double e = 0.8;
        const OnShellMomentum p(1.0, {1.0, 0.0, 0.0});
        const auto h = interaction_hamiltonian(s, p, {{0, e, 0}, {0, 0, 0}, 1.0});
        // E x p = (0, e, 0) x (1, 0, 0) = (0, 0, -e), so H = +alpha e Sz / m.
        CHECK(max_abs(h.matrix - e * spin.z) <= 1e-12);
    }
}

TEST_CASE("rest-frame magnetic form") {
    const SpinValue s{1};
    const SpinMatrices spin = angular_momentum_matrices(s);

    // At rest the co-moving magnetic field is B itself.
    {
        const std::array<double, 3> b = {0.2, -0.5, 0.8};
        const auto h = rest_frame_b_form(s, OnShellMomentum::rest(1.0), {{0, 0, 0}, b, 1.0});
        CHECK(max_abs(h.matrix + spin.along(b)) <= 1e-12);
    }

    // Pure electric field at rest: no co-moving magnetic field at all.
    {
        const auto h = rest_frame_b_form(s, OnShellMomentum::rest(1.0),
                                         {{0.7, -0.1, 0.4}, {0, 0, 0}, 1.0});
        CHECK(max_abs(h.matrix) <= 1e-12);
    }
}

TEST_CASE("lab-frame closed form pins") {
    const SpinValue s{1};
    const SpinMatrices spin = angular_momentum_matrices(s);
    const double chi = 0.9;
    const OnShellMomentum p(1.0, {0.0, 0.0, std::sinh(chi)});

    // B along p: only the parallel spin couples, with no energy enhancement.
    {
        const double b = 0.6;
        const auto h = lab_frame_form(s, p, {{0, 0, 0}, {0, 0, b}, 1.0});
        CHECK(max_abs(h.matrix + b * spin.z) <= 1e-12);
    }
    // B transverse to p: the transverse spin picks up the P0/m factor.
    {
        const double b = 0.6;
        const auto h = lab_frame_form(s, p, {{0, 0, 0}, {b, 0, 0}, 1.0});
        CHECK(max_abs(h.matrix + std::cosh(chi) * b * spin.x) <= 1e-12);
    }
    // At rest the split degenerates and the expression is -alpha S.B.
    {
        const std::array<double, 3> b = {0.3, 0.4, -0.2};
        const auto h = lab_frame_form(s, OnShellMomentum::rest(1.0), {{0, 0, 0}, b, 2.0});
        CHECK(max_abs(h.matrix + 2.0 * spin.along(b)) <= 1e-12);
    }
}

TEST_CASE("the three coupling forms agree") {
    RandomStream rng(515);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
        const int twice_s = 1 + static_cast<int>(rng.uniform() * 3.0);
        const SpinValue s{std::min(twice_s, 3)};
        const double m = rng.uniform(0.4, 2.0);
        const OnShellMomentum p = rng.random_momentum(m, 5.0 * m);
        const EMField f = random_field(rng);

        const CMatrix h22 = interaction_hamiltonian(s, p, f).matrix;
        const CMatrix hrest = rest_frame_b_form(s, p, f).matrix;
        const CMatrix hlab = lab_frame_form(s, p, f).matrix;
        worst = std::max({worst, max_abs(h22 - hrest), max_abs(h22 - hlab), max_abs(hrest - hlab)});
        CHECK(hermiticity_defect(h22) <= 1e-10);
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("flipping the tensor orientation breaks the lab-form match") {
    const SpinValue s{1};
    const OnShellMomentum p(1.0, {0.4, -0.2, 0.7});
    const EMField f{{0.3, 0.1, -0.2}, {0.5, -0.4, 0.2}, 1.0};
    const CMatrix flipped = interaction_hamiltonian(s, p, f, -1.0).matrix;
    const CMatrix rest_flipped = rest_frame_b_form(s, p, f, -1.0).matrix;
    const CMatrix lab = lab_frame_form(s, p, f).matrix;
    // The two tensor routes flip together but the closed form stands still.
    CHECK(max_abs(flipped - rest_flipped) <= 1e-10);
    CHECK(max_abs(flipped - lab) > 0.1);
}

TEST_CASE("interaction expectations are observer independent") {
    const SpinValue s{1};
    RandomStream rng(2718);
    for (int n = 0; n < 50; ++n) {
        const OnShellMomentum p = rng.random_momentum(1.0, 2.0);
        const EMField f = random_field(rng);
        CVector amp(2);
        amp << Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const MomentumSpinState psi = MomentumSpinState::single(s, p, amp);
        const LorentzMatrix l = rng.random_lorentz(1.2);

        const Complex lhs = expectation(psi, OperatorFamily::from_function([&](const OnShellMomentum& q) {
                                            return interaction_hamiltonian(s, q, f).matrix;
                                        }));

        // Transform state and field tensor together.
        const MomentumSpinState moved = boost_state(l, psi);
        const AntisymTensor ft = transform_field_tensor(field_tensor(f), l);
        const Complex rhs =
            expectation(moved, OperatorFamily::from_function([&](const OnShellMomentum& q) {
                            const SpinTensorOp st = intrinsic_spin_tensor(s, q);
                            CMatrix acc = CMatrix::Zero(2, 2);
                            for (int a = 0; a < 4; ++a)
                                for (int b = a + 1; b < 4; ++b) acc += ft(a, b) * st.lower(a, b);
                            return CMatrix(-f.alpha * acc);
                        }));
        CHECK(std::abs(lhs - rhs) <= 1e-9);
    }
}

TEST_CASE("non-relativistic limit") {
    const SpinValue s{1};
    const EMField f{{0.4, 0.0, 0.3}, {0.1, 0.2, 0.7}, 1.3};
    const double m = 1.0;

    // Exact agreement at rest.
    {
        const auto r = nr_limit_check(s, f, m, {{0.0, 0.0, 0.0}});
        CHECK(r.samples.size() == 1);
        CHECK(r.samples[0].inputs[1].second[0] <= 1e-12);
    }

    // Quadratic remainder: residual ratio ~ 100 between |p| = 1e-3 and 1e-2.
    {
        const auto residual_at = [&](double pn) {
            const OnShellMomentum p(m, {0.57735 * pn, 0.57735 * pn, 0.57735 * pn});
            const SpinMatrices spin = angular_momentum_matrices(s);
            const auto& q = p.spatial();
            const std::array<double, 3> exq = {
                f.electric[1] * q[2] - f.electric[2] * q[1],
                f.electric[2] * q[0] - f.electric[0] * q[2],
                f.electric[0] * q[1] - f.electric[1] * q[0],
            };
            const CMatrix h_nr = -f.alpha * (spin.along(exq) / m + spin.along(f.magnetic));
            return max_abs(interaction_hamiltonian(s, p, f).matrix - h_nr);
        };
        const double ratio = residual_at(1e-2 * m) / residual_at(1e-3 * m);
        CHECK(ratio > 50.0);
        CHECK(ratio < 200.0);
    }

    // Fitted exponent within the acceptance band (fixed direction, |p| swept).
    {
        const auto r = nr_limit_check(
            s, f, m, {{1e-3, 0, 0}, {3e-3, 0, 0}, {1e-2, 0, 0}, {3e-2, 0, 0}});
        CHECK(r.passed);
        double exponent = 0.0;
        for (const auto& [k, v] : r.metadata)
            if (k == "scaling_exponent") exponent = std::stod(v);
        CHECK(exponent > 1.8);
        CHECK(exponent < 2.2);
    }

    // Pure electric field couples exactly linearly: nothing to fit, and the
    // check holds vacuously.
    {
        const EMField pure_e{{0.5, 0.2, 0.0}, {0, 0, 0}, 1.0};
        const auto r = nr_limit_check(s, pure_e, m, {{1e-3, 0, 0}, {0, 1e-2, 0}});
        CHECK(r.passed);
        CHECK(r.max_residual == 0.0);
    }

    // Extracted linear electric coefficient: alpha/m, twice the Thomas value.
    {
        const double coeff = nr_electric_linear_coefficient(s, f, m);
        CHECK(coeff == doctest::Approx(f.alpha / m).epsilon(1e-6));
        const double coeff2 = nr_electric_linear_coefficient({2}, f, 1.7);
        CHECK(coeff2 == doctest::Approx(f.alpha / 1.7).epsilon(1e-6));
    }
}

TEST_CASE("spectrum") {
    const SpinValue s1{2};
    const auto h = interaction_hamiltonian(s1, OnShellMomentum::rest(1.0),
                                           {{0, 0, 0}, {0, 0, 1.0}, 1.0});
    const auto eigs = spectrum(h);
    REQUIRE(eigs.size() == 3);
    CHECK(eigs[0] == doctest::Approx(-1.0));
    CHECK(eigs[1] == doctest::Approx(0.0));
    CHECK(eigs[2] == doctest::Approx(1.0));

    const auto zero = spectrum({OnShellMomentum::rest(1.0), CMatrix::Zero(4, 4)});
    for (double e : zero) CHECK(e == 0.0);

    CMatrix bad(2, 2);
    bad << Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0);
    CHECK_THROWS_AS(spectrum({OnShellMomentum::rest(1.0), bad}), NotHermitian);
}

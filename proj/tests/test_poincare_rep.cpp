#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "relspin/poincare_rep.hpp"
#include "relspin/sampling.hpp"

using namespace relspin;

namespace {

CVector spin_up(int d) {
    CVector v = CVector::Zero(d);
    v(0) = 1.0;
    return v;
}

/// Dense two-sector evaluation: embed both sectors in one block-diagonal
/// matrix and evaluate psi^dag O psi on the stacked amplitude vector.
Complex dense_two_sector_expectation(const CMatrix& o1, const CVector& a1, const CMatrix& o2,
                                     const CVector& a2) {
    const int d = static_cast<int>(a1.size());
    CMatrix big = CMatrix::Zero(2 * d, 2 * d);
    big.topLeftCorner(d, d) = o1;
    big.bottomRightCorner(d, d) = o2;
    CVector psi(2 * d);
    psi.head(d) = a1;
    psi.tail(d) = a2;
    return psi.dot(big * psi);
}

}  // namespace

TEST_CASE("on-shell momentum renormalizes and validates") {
    const OnShellMomentum p(1.0, {1.0, 0.0, 0.0});
    CHECK(p.energy() == doctest::Approx(std::sqrt(2.0)));
    CHECK(minkowski_dot(p.four_vector(), p.four_vector()) == doctest::Approx(-1.0));

    CHECK_NOTHROW(OnShellMomentum::from_four_vector({std::sqrt(2.0) + 1e-11, 1, 0, 0}, 1.0));
    CHECK_THROWS_AS(OnShellMomentum::from_four_vector({2.0, 1, 0, 0}, 1.0), OffShellMomentum);
    CHECK_THROWS_AS(OnShellMomentum(-1.0, {0, 0, 0}), OffShellMomentum);
}

TEST_CASE("pauli-lubanski reduces to (0, m S) at rest") {
    for (int twice_s : {1, 2, 3}) {
        const SpinValue s{twice_s};
        const double m = 1.7;
        const auto w = pauli_lubanski(s, OnShellMomentum::rest(m));
        const SpinMatrices spin = angular_momentum_matrices(s);
        CHECK(max_abs(w[0].matrix) == 0.0);
        for (int i = 0; i < 3; ++i) CHECK(max_abs(w[i + 1].matrix - m * spin[i]) <= 1e-14);
    }
}

TEST_CASE("pauli-lubanski components at p = (sqrt2, 1, 0, 0)") {
    const SpinValue s{1};
    const SpinMatrices spin = angular_momentum_matrices(s);
    const auto w = pauli_lubanski(s, OnShellMomentum(1.0, {1.0, 0.0, 0.0}));
    CHECK(max_abs(w[0].matrix - spin.x) <= 1e-14);
    CHECK(max_abs(w[1].matrix - std::sqrt(2.0) * spin.x) <= 1e-12);
    CHECK(max_abs(w[2].matrix - spin.y) <= 1e-14);
    CHECK(max_abs(w[3].matrix - spin.z) <= 1e-14);
}

TEST_CASE("pauli-lubanski satisfies orthogonality and the casimir") {
    RandomStream rng(321);
    for (int twice_s : {1, 2, 3, 4}) {
        const SpinValue s{twice_s};
        const int d = s.dimension();
        for (int n = 0; n < 50; ++n) {
            const double m = rng.uniform(0.3, 2.5);
            const OnShellMomentum p = rng.random_momentum(m, 10.0 * m);
            const auto w = pauli_lubanski(s, p);
            for (const auto& comp : w) CHECK(hermiticity_defect(comp.matrix) <= 1e-10);

            // W^mu p_mu = 0.
            const FourVector pv = p.four_vector();
            CMatrix wp = -w[0].matrix * pv[0];
            for (int i = 1; i < 4; ++i) wp += w[i].matrix * pv[i];
            CHECK(max_abs(wp) <= 1e-10 * std::max(1.0, m * m * (1.0 + p.energy() / m)));

            // W_mu W^mu = m^2 s(s+1), checked through the eigenvalues too.
            CMatrix w2 = -w[0].matrix * w[0].matrix;
            for (int i = 1; i < 4; ++i) w2 += w[i].matrix * w[i].matrix;
            const double want = m * m * s.casimir();
            CHECK(max_abs(w2 - want * CMatrix::Identity(d, d)) <= 1e-9 * std::max(1.0, want));
            Eigen::SelfAdjointEigenSolver<CMatrix> es(w2);
            for (int k = 0; k < d; ++k)
                CHECK(es.eigenvalues()(k) == doctest::Approx(want).epsilon(1e-9));
        }
    }
}

TEST_CASE("boost_state basics") {
    const SpinValue s{1};
    const MomentumSpinState psi =
        MomentumSpinState::single(s, OnShellMomentum::rest(1.0), spin_up(2));

    const MomentumSpinState same = boost_state(LorentzMatrix::identity(), psi);
    CHECK(std::abs(state_overlap(psi, same) - Complex(1.0)) <= 1e-12);

    // At rest the little group is the full rotation group.
    const LorentzMatrix r0 = LorentzMatrix::rotation({0, 1, 0}, 0.9);
    const MomentumSpinState rotated = boost_state(r0, psi);
    CHECK(rotated.terms().size() == 1);
    CHECK(rotated.terms()[0].momentum.spatial_norm() <= 1e-12);
    const CMatrix d = rotation_rep(s, r0);
    CHECK((rotated.terms()[0].amplitude - d * spin_up(2)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("boost then inverse boost returns the state") {
    const SpinValue s{3};
    CVector a1(4), a2(4);
    a1 << Complex(0.3, 0.1), Complex(0.0, 0.0), Complex(-0.2, 0.4), Complex(0.1, 0.0);
    a2 << Complex(0.0, 0.5), Complex(0.2, -0.1), Complex(0.0, 0.0), Complex(0.3, 0.3);
    const MomentumSpinState psi(
        s, {StateTerm{OnShellMomentum(1.0, {0.4, -0.2, 0.1}), a1},
            StateTerm{OnShellMomentum(1.0, {-1.0, 0.3, 2.0}), a2}});

    RandomStream rng(17);
    for (int n = 0; n < 20; ++n) {
        const LorentzMatrix l = rng.random_lorentz(1.5);
        const MomentumSpinState back = boost_state(l.inverse(), boost_state(l, psi));
        CHECK(std::abs(back.norm_squared() - 1.0) <= 1e-10);
        CHECK(std::abs(std::abs(state_overlap(psi, back)) - 1.0) <= 1e-10);
    }
}

TEST_CASE("expectation pins at rest") {
    const SpinValue s{1};
    const SpinMatrices spin = angular_momentum_matrices(s);
    const MomentumSpinState psi =
        MomentumSpinState::single(s, OnShellMomentum::rest(1.0), spin_up(2));
    const auto sz = OperatorFamily::from_function([&](const OnShellMomentum&) { return spin.z; });
    const auto sx = OperatorFamily::from_function([&](const OnShellMomentum&) { return spin.x; });
    CHECK(expectation(psi, sz).real() == doctest::Approx(0.5));
    CHECK(std::abs(expectation(psi, sz).imag()) <= 1e-15);
    CHECK(std::abs(expectation(psi, sx)) <= 1e-15);
}

TEST_CASE("expectation over two momenta sums the diagonal sectors") {
    const SpinValue s{1};
    const OnShellMomentum p1(1.0, {0.0, 0.0, 1.0});
    const OnShellMomentum p2(1.0, {0.0, 0.0, -1.0});
    CVector up = spin_up(2);
    CVector down = CVector::Zero(2);
    down(1) = 1.0;
    const MomentumSpinState psi(s, {StateTerm{p1, up / std::sqrt(2.0)},
                                    StateTerm{p2, down / std::sqrt(2.0)}});

    // W^0 family: p.S on each sector. By hand: (1/2)(q/2) + (1/2)(q/2) = 1/2.
    const auto w0 = OperatorFamily::from_function([&](const OnShellMomentum& p) {
        return pauli_lubanski(s, p)[0].matrix;
    });
    CHECK(expectation(psi, w0).real() == doctest::Approx(0.5));

    // Same value from a dense block computation.
    const Complex dense = dense_two_sector_expectation(
        pauli_lubanski(s, p1)[0].matrix, up / std::sqrt(2.0), pauli_lubanski(s, p2)[0].matrix,
        down / std::sqrt(2.0));
    CHECK(std::abs(expectation(psi, w0) - dense) <= 1e-14);
}

TEST_CASE("expectation reports a missing sector") {
    const SpinValue s{1};
    const OnShellMomentum p1(1.0, {0.0, 0.0, 1.0});
    const OnShellMomentum p2(1.0, {0.0, 1.0, 0.0});
    const MomentumSpinState psi = MomentumSpinState::single(s, p1, spin_up(2));
    const auto family = OperatorFamily::from_sectors({SectorOperator{p2, CMatrix::Identity(2, 2)}});
    CHECK_THROWS_AS(expectation(psi, family), MissingSector);

    const auto matching = OperatorFamily::from_sectors({SectorOperator{p1, CMatrix::Identity(2, 2)}});
    CHECK(expectation(psi, matching).real() == doctest::Approx(1.0));
}

TEST_CASE("state invariants") {
    const SpinValue s{1};
    const OnShellMomentum p(1.0, {0.0, 0.0, 1.0});
    // Normalization happens on construction.
    CVector big = 3.0 * spin_up(2);
    const MomentumSpinState psi = MomentumSpinState::single(s, p, big);
    CHECK(psi.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
    // Coincident momentum labels are rejected.
    CHECK_THROWS(MomentumSpinState(s, {StateTerm{p, spin_up(2)}, StateTerm{p, spin_up(2)}}));
}

TEST_CASE("pauli-lubanski transforms as a four-vector under the induced action") {
    RandomStream rng(777);
    for (int twice_s : {1, 2, 3}) {
        const SpinValue s{twice_s};
        for (int n = 0; n < 100; ++n) {
            const double m = rng.uniform(0.5, 2.0);
            const OnShellMomentum p = rng.random_momentum(m, 3.0 * m);
            const LorentzMatrix l = rng.random_lorentz(1.5);
            const OnShellMomentum q =
                OnShellMomentum::from_four_vector(l.apply(p.four_vector()), m);
            const CMatrix d = rotation_rep(s, wigner_rotation(l, p.four_vector(), m));

            const auto wp = pauli_lubanski(s, p);
            const auto wq = pauli_lubanski(s, q);
            for (int mu = 0; mu < 4; ++mu) {
                CMatrix rhs = CMatrix::Zero(s.dimension(), s.dimension());
                for (int nu = 0; nu < 4; ++nu) rhs += l.matrix()(mu, nu) * wp[nu].matrix;
                CHECK(max_abs(d.adjoint() * wq[mu].matrix * d - rhs) <= 1e-9);
            }
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "relspin/sampling.hpp"
#include "relspin/spin_algebra.hpp"

using namespace relspin;

namespace {

double commutator_defect(const SpinMatrices& s) {
    double defect = 0.0;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        const CMatrix comm = s[i] * s[j] - s[j] * s[i];
        defect = std::max(defect, max_abs(comm - Complex(0, 1) * s[k]));
    }
    return defect;
}

}  // namespace

TEST_CASE("spin-1/2 matrices are the halved pauli matrices") {
    const SpinMatrices s = angular_momentum_matrices({1});
    CHECK(max_abs(s.x - 0.5 * oracle::pauli_x()) <= 1e-15);
    CHECK(max_abs(s.y - 0.5 * oracle::pauli_y()) <= 1e-15);
    CHECK(max_abs(s.z - 0.5 * oracle::pauli_z()) <= 1e-15);
}

TEST_CASE("spin-1 matrices match the ladder construction written longhand") {
    const SpinMatrices s = angular_momentum_matrices({2});
    CHECK(max_abs(s.x - oracle::spin1_x()) <= 1e-15);
    CHECK(max_abs(s.y - oracle::spin1_y()) <= 1e-15);
    CHECK(max_abs(s.z - oracle::spin1_z()) <= 1e-15);
    CHECK(std::abs(s.x(0, 1) - Complex(1.0 / std::sqrt(2.0))) <= 1e-15);
}

TEST_CASE("spin matrices satisfy the algebra and casimir for all tested spins") {
    for (int twice_s = 0; twice_s <= 8; ++twice_s) {
        const SpinValue sv{twice_s};
        const SpinMatrices s = angular_momentum_matrices(sv);
        CHECK(commutator_defect(s) <= 1e-12);
        for (int i = 0; i < 3; ++i) CHECK(hermiticity_defect(s[i]) <= 1e-12);
        const CMatrix casimir = s.x * s.x + s.y * s.y + s.z * s.z;
        CHECK(max_abs(casimir - sv.casimir() * CMatrix::Identity(sv.dimension(), sv.dimension())) <=
              1e-12);
        // Sz spectrum runs s, s-1, ..., -s down the diagonal.
        for (int k = 0; k < sv.dimension(); ++k)
            CHECK(s.z(k, k).real() == doctest::Approx(sv.value() - k));
    }
    // Casimir eigenvalue 15/4 for spin 3/2 on every basis vector.
    const SpinMatrices s32 = angular_momentum_matrices({3});
    const CMatrix c = s32.x * s32.x + s32.y * s32.y + s32.z * s32.z;
    for (int k = 0; k < 4; ++k) CHECK(c(k, k).real() == doctest::Approx(3.75));
}

TEST_CASE("rotation representation pins") {
    CHECK(max_abs(rotation_rep({1}, LorentzMatrix::identity()) - CMatrix::Identity(2, 2)) <= 1e-15);

    // Rotation by pi about z on spin 1/2: diag(-i, +i).
    const CMatrix d = rotation_rep({1}, LorentzMatrix::rotation({0, 0, 1}, std::numbers::pi));
    CHECK(std::abs(d(0, 0) - Complex(0, -1)) <= 1e-12);
    CHECK(std::abs(d(1, 1) - Complex(0, 1)) <= 1e-12);
    CHECK(std::abs(d(0, 1)) <= 1e-12);
    CHECK(std::abs(d(1, 0)) <= 1e-12);
}

TEST_CASE("rotation representation rejects boosts") {
    CHECK_THROWS_AS(rotation_rep({1}, LorentzMatrix::boost({0, 1, 0}, 0.3)), NotARotation);
}

TEST_CASE("rotation representation is unitary and conjugates the spin as a vector") {
    RandomStream rng(808);
    for (int twice_s = 1; twice_s <= 4; ++twice_s) {
        const SpinValue sv{twice_s};
        const SpinMatrices s = angular_momentum_matrices(sv);
        for (int n = 0; n < 100; ++n) {
            const LorentzMatrix r = rng.random_rotation();
            const CMatrix d = rotation_rep(sv, r);
            CHECK(max_abs(d * d.adjoint() - CMatrix::Identity(sv.dimension(), sv.dimension())) <=
                  1e-10);
            for (int i = 0; i < 3; ++i) {
                CMatrix rotated = CMatrix::Zero(sv.dimension(), sv.dimension());
                for (int j = 0; j < 3; ++j) rotated += r.matrix()(i + 1, j + 1) * s[j];
                CHECK(max_abs(d.adjoint() * s[i] * d - rotated) <= 1e-10);
            }
        }
    }
}

TEST_CASE("rotation representation respects composition up to the double-cover sign") {
    RandomStream rng(909);
    for (int twice_s = 1; twice_s <= 4; ++twice_s) {
        const SpinValue sv{twice_s};
        for (int n = 0; n < 50; ++n) {
            const LorentzMatrix r1 = rng.random_rotation();
            const LorentzMatrix r2 = rng.random_rotation();
            const CMatrix lhs = rotation_rep(sv, r1) * rotation_rep(sv, r2);
            const CMatrix rhs = rotation_rep(sv, r1 * r2);
            const double plus = max_abs(lhs - rhs);
            const double minus = max_abs(lhs + rhs);
            if (twice_s % 2 == 0) {
                CHECK(plus <= 1e-9);  // true representation for integer spin
            } else {
                CHECK(std::min(plus, minus) <= 1e-9);
            }
        }
    }
}

TEST_CASE("axis-angle extraction handles the angle-pi branch") {
    const auto aa = axis_angle_from_rotation(
        LorentzMatrix::rotation({0, 0, 1}, std::numbers::pi).matrix().bottomRightCorner<3, 3>());
    CHECK(aa.angle == doctest::Approx(std::numbers::pi));
    CHECK(std::abs(aa.axis[2]) == doctest::Approx(1.0));
    // Lexicographically larger axis: positive z, not negative.
    CHECK(aa.axis[2] > 0.0);

    const auto aa2 = axis_angle_from_rotation(
        LorentzMatrix::rotation({1, -1, 0}, std::numbers::pi).matrix().bottomRightCorner<3, 3>());
    CHECK(aa2.angle == doctest::Approx(std::numbers::pi));
    CHECK(aa2.axis[0] > 0.0);  // first nonzero component positive
    CHECK(aa2.axis[0] == doctest::Approx(std::sqrt(0.5)));
    CHECK(aa2.axis[1] == doctest::Approx(-std::sqrt(0.5)));
}

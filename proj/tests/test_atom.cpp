#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "polscat/atom.hpp"

using namespace polscat;
using Eigen::Matrix2cd;
using Eigen::MatrixXcd;

namespace {

LevelScheme scheme_half(Complex zeta0 = 1.0) { return {0.5, 1.5, zeta0}; }
LevelScheme scheme_one(Complex zeta0 = 1.0) { return {1.0, 2.0, zeta0}; }

bool cg2_is(double jg, double mg, int q, double je, long long num, long long den) {
    Fraction f = clebsch_gordan_squared(jg, mg, q, je);
    return f == Fraction{num, den};
}

}  // namespace

TEST_CASE("Clebsch-Gordan table for j=1/2 -> 3/2") {
    // sigma-: the edge transition is maximal.
    CHECK(clebsch_gordan(0.5, -0.5, -1, 1.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cg2_is(0.5, -0.5, -1, 1.5, 1, 1));
    CHECK(cg2_is(0.5, 0.5, 1, 1.5, 1, 1));
    // sigma+ from m=-1/2 and sigma- from m=+1/2: squared 1/3.
    CHECK(clebsch_gordan(0.5, -0.5, 1, 1.5) ==
          doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-15));
    CHECK(cg2_is(0.5, -0.5, 1, 1.5, 1, 3));
    CHECK(cg2_is(0.5, 0.5, -1, 1.5, 1, 3));
    // pi transitions: squared 2/3.
    CHECK(cg2_is(0.5, -0.5, 0, 1.5, 2, 3));
    CHECK(cg2_is(0.5, 0.5, 0, 1.5, 2, 3));
}

TEST_CASE("Clebsch-Gordan table for j=1 -> 2") {
    CHECK(clebsch_gordan(1.0, -1.0, 1, 2.0) ==
          doctest::Approx(std::sqrt(1.0 / 6.0)).epsilon(1e-15));
    CHECK(cg2_is(1.0, -1.0, 1, 2.0, 1, 6));
    CHECK(cg2_is(1.0, 0.0, 1, 2.0, 1, 2));
    CHECK(cg2_is(1.0, 1.0, 1, 2.0, 1, 1));
    CHECK(cg2_is(1.0, 1.0, -1, 2.0, 1, 6));
    CHECK(cg2_is(1.0, 0.0, -1, 2.0, 1, 2));
    CHECK(cg2_is(1.0, -1.0, -1, 2.0, 1, 1));
    CHECK(cg2_is(1.0, -1.0, 0, 2.0, 1, 2));
    CHECK(cg2_is(1.0, 0.0, 0, 2.0, 2, 3));
    CHECK(cg2_is(1.0, 1.0, 0, 2.0, 1, 2));
}

TEST_CASE("Clebsch-Gordan input validation") {
    CHECK_THROWS_AS(clebsch_gordan(-0.5, 0.5, 1, 0.5), InvalidInputError);
    CHECK_THROWS_AS(clebsch_gordan(0.3, 0.0, 1, 1.3), InvalidInputError);
    CHECK_THROWS_AS(clebsch_gordan(0.5, 0.5, 2, 1.5), InvalidInputError);
    // Out of range m just selects a vanishing coefficient.
    CHECK(clebsch_gordan(0.5, 0.5, 1, 0.5) == 0.0);
    CHECK(clebsch_gordan(1.0, 1.0, 1, 1.0) == 0.0);
}

TEST_CASE("level scheme validation") {
    CHECK_THROWS_AS(LevelScheme(0.0, 0.0, 1.0), InvalidInputError);
    CHECK_THROWS_AS(LevelScheme(0.5, 2.5, 1.0), InvalidInputError);
    CHECK_THROWS_AS(LevelScheme(0.5, 1.0, 1.0), InvalidInputError);
    LevelScheme s(1.0, 2.0, 0.5);
    CHECK(s.ground_count() == 3);
    CHECK(s.excited_count() == 5);
}

TEST_CASE("chi elements of the j=1/2 -> 3/2 scheme") {
    LevelScheme s = scheme_half(Complex(2.0, 0.0));
    Matrix2cd block = chi_element(s, 0, 0);  // m = -1/2
    CHECK(std::abs(block(0, 0) - Complex(2.0 / 3.0, 0.0)) < 1e-15);
    CHECK(std::abs(block(1, 1) - Complex(2.0, 0.0)) < 1e-15);
    CHECK(std::abs(block(0, 1)) + std::abs(block(1, 0)) == 0.0);

    // No Raman path connects the two ground sublevels (Delta m = 1 only).
    CHECK(chi_element(s, 0, 1).cwiseAbs().maxCoeff() == 0.0);
    CHECK(chi_element(s, 1, 0).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("chi elements of the j=1 -> 2 scheme") {
    LevelScheme s = scheme_one();
    Matrix2cd center = chi_element(s, 1, 1);
    CHECK(std::abs(center(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(center(1, 1) - 0.5) < 1e-15);

    // The m=-1 <-> m=+1 coherence block couples sigma+ to sigma-.
    Matrix2cd blk = chi_element(s, 0, 2);
    CHECK(std::abs(blk(0, 1) - 1.0 / 6.0) < 1e-15);
    CHECK(std::abs(blk(0, 0)) + std::abs(blk(1, 0)) + std::abs(blk(1, 1)) == 0.0);
    Matrix2cd adj = chi_element(s, 2, 0);
    CHECK((adj - blk.adjoint()).cwiseAbs().maxCoeff() == 0.0);

    Matrix2cd edge = chi_element(s, 0, 0);
    CHECK(std::abs(edge(0, 0) - 1.0 / 6.0) < 1e-15);
    CHECK(std::abs(edge(1, 1) - 1.0) < 1e-15);
}

TEST_CASE("chi is Hermitian as an operator-valued matrix") {
    for (const LevelScheme& s : {scheme_half(), scheme_one(), LevelScheme(1.0, 1.0, 1.0)}) {
        for (int i = 0; i < s.ground_count(); ++i)
            for (int j = 0; j < s.ground_count(); ++j) {
                Matrix2cd a = chi_element(s, i, j);
                Matrix2cd b = chi_element(s, j, i);
                CHECK((a - b.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
            }
    }
}

TEST_CASE("chi entries are positive bilinears for the two standard schemes") {
    // Only squared / same-sign CG products show up, so the global sign
    // convention cancels out.
    for (const LevelScheme& s : {scheme_half(), scheme_one()}) {
        for (int i = 0; i < s.ground_count(); ++i)
            for (int j = 0; j < s.ground_count(); ++j) {
                Matrix2cd blk = chi_element(s, i, j);
                for (int r = 0; r < 2; ++r)
                    for (int c = 0; c < 2; ++c) {
                        CHECK(blk(r, c).imag() == 0.0);
                        CHECK(blk(r, c).real() >= 0.0);
                    }
            }
    }
}

TEST_CASE("polarizability of diagonal j=1/2 states") {
    LevelScheme s = scheme_half();
    for (double theta : {0.0, 0.3, std::numbers::pi / 4.0, 1.2}) {
        double c2 = std::cos(theta) * std::cos(theta);
        double s2 = 1.0 - c2;
        MatrixXcd rho = MatrixXcd::Zero(2, 2);
        rho(0, 0) = c2;
        rho(1, 1) = s2;
        PolarizabilityTensor zeta = polarizability(s, GroundDensityMatrix(rho));
        CHECK(std::abs(zeta.zeta(0, 0) - (c2 / 3.0 + s2)) < 1e-15);
        CHECK(std::abs(zeta.zeta(1, 1) - (c2 + s2 / 3.0)) < 1e-15);
        CHECK(std::abs(zeta.zeta(0, 1)) + std::abs(zeta.zeta(1, 0)) == 0.0);
    }
    // Equal populations give the isotropic value 2/3 zeta0.
    MatrixXcd rho = 0.5 * MatrixXcd::Identity(2, 2);
    PolarizabilityTensor zeta = polarizability(s, GroundDensityMatrix(rho));
    CHECK(std::abs(zeta.zeta(0, 0) - 2.0 / 3.0) < 1e-15);
    CHECK(std::abs(zeta.zeta(1, 1) - 2.0 / 3.0) < 1e-15);
}

TEST_CASE("polarizability of the j=1 central sublevel") {
    LevelScheme s = scheme_one();
    MatrixXcd rho = MatrixXcd::Zero(3, 3);
    rho(1, 1) = 1.0;
    PolarizabilityTensor zeta = polarizability(s, GroundDensityMatrix(rho));
    CHECK(std::abs(zeta.zeta(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(zeta.zeta(1, 1) - 0.5) < 1e-15);
}

TEST_CASE("polarizability from mixed j=1 populations by brute-force trace") {
    LevelScheme s = scheme_one();
    MatrixXcd rho = MatrixXcd::Zero(3, 3);
    rho(0, 0) = 4.0 / 17.0;
    rho(1, 1) = 9.0 / 17.0;
    rho(2, 2) = 4.0 / 17.0;
    PolarizabilityTensor zeta = polarizability(s, GroundDensityMatrix(rho));

    // (4/17)(1/6) + (9/17)(1/2) + (4/17)(1) = 55/102 on both diagonals.
    Complex expect(55.0 / 102.0, 0.0);
    CHECK(std::abs(zeta.zeta(0, 0) - expect) < 1e-15);
    CHECK(std::abs(zeta.zeta(1, 1) - expect) < 1e-15);

    // Independent brute-force trace over every chi element.
    Matrix2cd brute = Matrix2cd::Zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) brute += rho(j, i) * chi_element(s, i, j);
    CHECK((brute - zeta.zeta).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("polarizability is linear in rho") {
    std::mt19937_64 rng(0x5eed0002);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    LevelScheme s = scheme_one(Complex(0.7, 0.1));
    for (int trial = 0; trial < 25; ++trial) {
        // Two random physical states and a random convex weight.
        MatrixXcd a = MatrixXcd::Random(3, 3);
        MatrixXcd r1 = a * a.adjoint();
        r1 /= r1.trace();
        MatrixXcd b = MatrixXcd::Random(3, 3);
        MatrixXcd r2 = b * b.adjoint();
        r2 /= r2.trace();
        double alpha = u(rng);

        Matrix2cd mix =
            polarizability(s, GroundDensityMatrix(alpha * r1 + (1.0 - alpha) * r2)).zeta;
        Matrix2cd sum = alpha * polarizability(s, GroundDensityMatrix(r1)).zeta +
                        (1.0 - alpha) * polarizability(s, GroundDensityMatrix(r2)).zeta;
        CHECK((mix - sum).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("stretched state pins the sigma+ diagonal to zeta0") {
    for (const LevelScheme& s : {scheme_half(Complex(0.37, 0.0)), scheme_one(Complex(0.37, 0.0)),
                                 LevelScheme(2.0, 3.0, Complex(0.37, 0.0))}) {
        int n = s.ground_count();
        MatrixXcd rho = MatrixXcd::Zero(n, n);
        rho(n - 1, n - 1) = 1.0;
        PolarizabilityTensor zeta = polarizability(s, GroundDensityMatrix(rho));
        CHECK(std::abs(zeta.zeta(0, 0) - s.zeta0()) < 1e-15);
    }
}

TEST_CASE("j=1/2 coherences never enter the polarizability") {
    LevelScheme s = scheme_half();
    MatrixXcd diag = MatrixXcd::Zero(2, 2);
    diag(0, 0) = 0.25;
    diag(1, 1) = 0.75;
    MatrixXcd with_coh = diag;
    with_coh(0, 1) = Complex(0.2, 0.1);
    with_coh(1, 0) = std::conj(with_coh(0, 1));

    Matrix2cd za = polarizability(s, GroundDensityMatrix(diag)).zeta;
    Matrix2cd zb = polarizability(s, GroundDensityMatrix(with_coh)).zeta;
    CHECK((za - zb).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dispersion block scales with dzeta0_dk") {
    LevelScheme s(1.0, 2.0, Complex(2.0, 0.0), Complex(0.0, 3.0));
    MatrixXcd rho = MatrixXcd::Identity(3, 3) / 3.0;
    PolarizabilityTensor zeta = polarizability(s, GroundDensityMatrix(rho));
    CHECK((zeta.dzeta_dk - Complex(0.0, 1.5) * zeta.zeta).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("density matrix validation") {
    MatrixXcd bad_trace = MatrixXcd::Identity(2, 2);
    CHECK_THROWS_AS(GroundDensityMatrix{bad_trace}, InvalidInputError);

    MatrixXcd non_hermitian = MatrixXcd::Zero(2, 2);
    non_hermitian(0, 0) = 1.0;
    non_hermitian(0, 1) = 0.5;
    CHECK_THROWS_AS(GroundDensityMatrix{non_hermitian}, InvalidInputError);

    MatrixXcd negative = MatrixXcd::Zero(2, 2);
    negative(0, 0) = 1.2;
    negative(1, 1) = -0.2;
    CHECK_THROWS_AS(GroundDensityMatrix(negative, true), InvalidInputError);
    CHECK_NOTHROW(GroundDensityMatrix(negative, false));

    LevelScheme s = scheme_half();
    MatrixXcd wrong_size = MatrixXcd::Identity(3, 3) / 3.0;
    CHECK_THROWS_AS(polarizability(s, GroundDensityMatrix(wrong_size)), InvalidInputError);
}

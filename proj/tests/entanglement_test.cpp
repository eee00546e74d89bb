#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "spinscatter/entanglement.hpp"
#include "spinscatter/spin_smatrix.hpp"

using namespace spinscatter;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
} // namespace

TEST_CASE("reduced density of reference states") {
    const TwoSpinState up_up(Basis::Product, Eigen::Vector4cd(1, 0, 0, 0));
    const Eigen::Matrix2cd rho1 = reduced_density(up_up, 1).matrix();
    CHECK(std::abs(rho1(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(rho1(1, 1)) < 1e-15);

    const TwoSpinState epr = magic_basis()[0];
    const Eigen::Matrix2cd mixed = reduced_density(epr, 2).matrix();
    CHECK(std::abs(mixed(0, 0) - 0.5) < 1e-14);
    CHECK(std::abs(mixed(1, 1) - 0.5) < 1e-14);
    CHECK(std::abs(mixed(0, 1)) < 1e-14);

    // particle 1 of the canonical in-state is pure |+>
    const Eigen::Matrix2cd pure1 =
        reduced_density(in_state_from_angle(kPi / 3), 1).matrix();
    CHECK(std::abs(pure1(0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(pure1(0, 1)) < 1e-14);
    CHECK(std::abs(pure1(1, 1)) < 1e-14);

    CHECK_THROWS_AS(reduced_density(up_up, 3), InputError);
    CHECK_THROWS_AS(reduced_density(to_coupled(up_up), 1), InputError);
}

TEST_CASE("reduced density invariants on random states") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const TwoSpinState state = testing::random_pure_two_spin(rng);
        for (int keep : {1, 2}) {
            const Eigen::Matrix2cd rho = reduced_density(state, keep).matrix();
            CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
            CHECK(std::abs(rho.trace().real() - 1.0) < 1e-13);
            const auto eigs = reduced_density(state, keep).eigenvalues();
            CHECK(eigs[0] >= eigs[1]);
            CHECK(eigs[1] >= 0.0);
            CHECK(eigs[0] <= 1.0);
        }
    }
}

TEST_CASE("reduced density rejects malformed matrices") {
    Eigen::Matrix2cd bad;
    bad << 0.5, Complex(0.1, 0.2), Complex(0.1, -0.1), 0.5;
    CHECK_THROWS_AS(ReducedDensity{bad}, InputError); // not Hermitian

    Eigen::Matrix2cd off_trace;
    off_trace << 0.7, 0, 0, 0.7;
    CHECK_THROWS_AS(ReducedDensity{off_trace}, InputError);

    Eigen::Matrix2cd indefinite;
    indefinite << 1.2, 0, 0, -0.2;
    CHECK_THROWS_AS(ReducedDensity{indefinite}, InputError);
}

TEST_CASE("von Neumann entropy values") {
    Eigen::Matrix2cd pure;
    pure << 1, 0, 0, 0;
    CHECK(von_neumann_entropy(ReducedDensity(pure)) == 0.0);

    Eigen::Matrix2cd mixed;
    mixed << 0.5, 0, 0, 0.5;
    CHECK(von_neumann_entropy(ReducedDensity(mixed)) ==
          doctest::Approx(1.0).epsilon(1e-14));

    Eigen::Matrix2cd skewed;
    skewed << 0.75, 0, 0, 0.25;
    // frozen: -(3/4 log2 3/4 + 1/4 log2 1/4)
    CHECK(von_neumann_entropy(ReducedDensity(skewed)) ==
          doctest::Approx(0.8112781244591328).epsilon(1e-14));
}

TEST_CASE("entanglement entropy on reference states") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const auto report = entanglement_entropy(product_state(
            testing::random_single_spin(rng), testing::random_single_spin(rng)));
        CHECK(report.entropy_bits < 1e-10);
    }
    for (const auto &ket : magic_basis())
        CHECK(entanglement_entropy(ket).entropy_bits ==
              doctest::Approx(1.0).epsilon(1e-12));

    // the phase-parameterized maximal kets (|+-> +- i e^{i phase}-free |-+>)
    for (double phase : {0.0, 0.4, 1.3, 2.8}) {
        const Complex g = std::exp(Complex(0, phase)) * kInvSqrt2;
        for (double sign : {1.0, -1.0}) {
            const TwoSpinState e_theta(
                Basis::Product,
                Eigen::Vector4cd(0, g, sign * Complex(0, 1) * g, 0));
            CHECK(entanglement_entropy(e_theta).entropy_bits ==
                  doctest::Approx(1.0).epsilon(1e-12));
            const TwoSpinState b_theta(
                Basis::Product,
                Eigen::Vector4cd(g, 0, 0, sign * Complex(0, 1) * g));
            CHECK(entanglement_entropy(b_theta).entropy_bits ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("marginal entropies of the two particles agree") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 1000; ++trial) {
        const TwoSpinState state = testing::random_pure_two_spin(rng);
        const double s1 = von_neumann_entropy(reduced_density(state, 1));
        const double s2 = von_neumann_entropy(reduced_density(state, 2));
        CHECK(std::abs(s1 - s2) < 1e-10);
        CHECK(std::abs(entanglement_entropy(state).entropy_bits - s1) < 1e-10);
    }
}

TEST_CASE("schmidt coefficients from the report") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    for (int trial = 0; trial < 200; ++trial) {
        const double theta = angle(rng);
        const SpinPhasePair phases{angle(rng), angle(rng)};
        const TwoSpinState out =
            apply_spin_smatrix(in_state_from_angle(theta), phases);
        const auto report = entanglement_entropy(out);

        // lambda+- = sqrt((1 +- x)/2) with the closed-form x
        const double s = std::sin(theta);
        const double x = std::sqrt(std::max(
            1.0 - s * s * s * s * std::pow(std::sin(2.0 * phases.difference()), 2),
            0.0));
        CHECK(std::abs(report.schmidt[0] - std::sqrt(0.5 * (1 + x))) < 1e-10);
        CHECK(std::abs(report.schmidt[1] - std::sqrt(0.5 * (1 - x))) < 1e-10);

        // and they match an SVD of the amplitude matrix
        Eigen::Matrix2cd c;
        c << out.amplitude(0), out.amplitude(1), out.amplitude(2), out.amplitude(3);
        Eigen::JacobiSVD<Eigen::Matrix2cd> svd(c);
        CHECK(std::abs(report.schmidt[0] - svd.singularValues()(0)) < 1e-10);
        CHECK(std::abs(report.schmidt[1] - svd.singularValues()(1)) < 1e-10);

        CHECK(report.schmidt[0] * report.schmidt[0] +
                  report.schmidt[1] * report.schmidt[1] ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(report.entropy_bits >= -1e-15);
        CHECK(report.entropy_bits <= 1.0 + 1e-15);
    }
}

TEST_CASE("entropy is invariant under local unitaries") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const TwoSpinState state = testing::random_pure_two_spin(rng);
        const Eigen::MatrixXcd u1 =
            wigner_D_matrix(AngularMomentum(1), testing::random_rotation(rng));
        const Eigen::MatrixXcd u2 =
            wigner_D_matrix(AngularMomentum(1), testing::random_rotation(rng));
        const Eigen::Vector4cd mapped =
            testing::kron2(u1, u2) * state.amplitudes();
        const TwoSpinState transformed(Basis::Product, mapped);
        CHECK(std::abs(entanglement_entropy(transformed).entropy_bits -
                       entanglement_entropy(state).entropy_bits) < 1e-10);
    }
}

TEST_CASE("closed form matches the full pipeline on a 64x64 grid") {
    double worst = 0.0;
    for (int i = 0; i < 64; ++i) {
        const double theta = i * kPi / 64;
        for (int k = 0; k < 64; ++k) {
            const double dd = k * kPi / 64;
            const TwoSpinState out = apply_spin_smatrix(in_state_from_angle(theta),
                                                        SpinPhasePair{dd, 0.0});
            worst = std::max(worst,
                             std::abs(entanglement_entropy(out).entropy_bits -
                                      closed_form_entanglement(theta, dd, 0.0)));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("closed form reference values") {
    CHECK(closed_form_entanglement(0.0, 0.7, -0.2) == 0.0);
    CHECK(closed_form_entanglement(kPi / 2, kPi / 4, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // frozen from the pipeline oracle
    CHECK(closed_form_entanglement(kPi / 4, kPi / 8, 0.0) ==
          doctest::Approx(0.2057630542756901).epsilon(1e-12));
}

TEST_CASE("E hits its bounds exactly when x does") {
    // E = 0 iff x = 1, E = 1 iff x = 0
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> angle(0.05, kPi - 0.05);
    for (int trial = 0; trial < 200; ++trial) {
        const double theta = angle(rng);
        const double dd = angle(rng);
        const double s = std::sin(theta);
        const double x =
            std::sqrt(std::max(1.0 - s * s * s * s * std::pow(std::sin(2 * dd), 2), 0.0));
        const double e = closed_form_entanglement(theta, dd, 0.0);
        if (std::abs(x - 1.0) < 1e-14)
            CHECK(e < 1e-12);
        else
            CHECK(e > 1e-12);
        if (std::abs(x) < 1e-14)
            CHECK(std::abs(e - 1.0) < 1e-12);
        else
            CHECK(e < 1.0 - 1e-14);
    }
}

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

Complex channel_phase(double delta) { return std::exp(Complex(0.0, 2.0 * delta)); }
} // namespace

TEST_CASE("out-state in the coupled basis") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    for (int trial = 0; trial < 50; ++trial) {
        const double theta = angle(rng);
        const SpinPhasePair phases{angle(rng), angle(rng)};
        const TwoSpinState out =
            apply_spin_smatrix(to_coupled(in_state_from_angle(theta)), phases);
        REQUIRE(out.basis() == Basis::Coupled);
        const Eigen::Vector4cd expected(
            channel_phase(phases.delta0) * std::sin(theta) * kInvSqrt2, 0.0,
            channel_phase(phases.delta1) * std::sin(theta) * kInvSqrt2,
            channel_phase(phases.delta1) * std::cos(theta));
        CHECK((out.amplitudes() - expected).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("out-state in the product basis") {
    std::mt19937 rng(73);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    for (int trial = 0; trial < 50; ++trial) {
        const double theta = angle(rng);
        const SpinPhasePair phases{angle(rng), angle(rng)};
        const TwoSpinState out =
            apply_spin_smatrix(in_state_from_angle(theta), phases);
        REQUIRE(out.basis() == Basis::Product);
        const Complex e0 = channel_phase(phases.delta0);
        const Complex e1 = channel_phase(phases.delta1);
        const Eigen::Vector4cd expected(e1 * std::cos(theta),
                                        0.5 * std::sin(theta) * (e1 + e0),
                                        0.5 * std::sin(theta) * (e1 - e0), 0.0);
        CHECK((out.amplitudes() - expected).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("spin exchange at 2 delta-diff = pi") {
    const double delta1 = 0.37;
    const TwoSpinState out = apply_spin_smatrix(
        in_state_from_angle(kPi / 2), SpinPhasePair{delta1 + kPi / 2, delta1});
    // |+-> becomes exp(2 i delta1)|-+>
    CHECK(std::abs(out.amplitude(2) - channel_phase(delta1)) < 1e-14);
    CHECK(std::abs(out.amplitude(1)) < 1e-14);
    CHECK(entanglement_entropy(out).entropy_bits < 1e-12);
}

TEST_CASE("operator form") {
    CHECK((smatrix_as_operator({0.0, 0.0}) - Eigen::Matrix4cd::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-15);

    const double delta = 0.81;
    const Eigen::Matrix4cd common = smatrix_as_operator({delta, delta});
    CHECK((common - channel_phase(delta) * Eigen::Matrix4cd::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-14);

    std::mt19937 rng(79);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Matrix4cd s = smatrix_as_operator({angle(rng), angle(rng)});
        CHECK((s * s.adjoint() - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() <
              1e-12);
    }
}

TEST_CASE("operator agrees with the state path") {
    std::mt19937 rng(83);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 50; ++trial) {
        const SpinPhasePair phases{angle(rng), angle(rng)};
        const TwoSpinState state = testing::random_pure_two_spin(rng);
        const Eigen::Vector4cd via_operator =
            smatrix_as_operator(phases) * state.amplitudes();
        const Eigen::Vector4cd via_state =
            apply_spin_smatrix(state, phases).amplitudes();
        CHECK((via_operator - via_state).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("rotational invariance of the S-matrix") {
    std::mt19937 rng(89);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Matrix4cd s = smatrix_as_operator({angle(rng), angle(rng)});
        const Eigen::Matrix2cd d =
            wigner_D_matrix(AngularMomentum(1), testing::random_rotation(rng));
        const Eigen::Matrix4cd dd = testing::kron2(d, d);
        worst = std::max(worst, (dd * s * dd.adjoint() - s).cwiseAbs().maxCoeff());
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("zero-entanglement cases are exact") {
    std::mt19937 rng(97);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_real_distribution<double> theta_dist(0.0, kPi);
    for (int trial = 0; trial < 50; ++trial) {
        // aligned spins
        CHECK(entanglement_entropy(
                  apply_spin_smatrix(in_state_from_angle(0.0),
                                     SpinPhasePair{angle(rng), angle(rng)}))
                  .entropy_bits < 1e-12);
        // same phase in both channels
        const double common = angle(rng);
        CHECK(entanglement_entropy(
                  apply_spin_smatrix(in_state_from_angle(theta_dist(rng)),
                                     SpinPhasePair{common, common}))
                  .entropy_bits < 1e-12);
        // spin exchange
        const double d1 = angle(rng);
        CHECK(entanglement_entropy(
                  apply_spin_smatrix(in_state_from_angle(theta_dist(rng)),
                                     SpinPhasePair{d1 + kPi / 2, d1}))
                  .entropy_bits < 1e-12);
    }
}

TEST_CASE("entanglement depends on the phases only through their difference") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_real_distribution<double> theta_dist(0.0, kPi);
    for (int trial = 0; trial < 100; ++trial) {
        const double theta = theta_dist(rng);
        const double d0 = angle(rng), d1 = angle(rng), shift = angle(rng);
        const auto a = entanglement_entropy(apply_spin_smatrix(
            in_state_from_angle(theta), SpinPhasePair{d0, d1}));
        const auto b = entanglement_entropy(apply_spin_smatrix(
            in_state_from_angle(theta), SpinPhasePair{d0 + shift, d1 + shift}));
        CHECK(std::abs(a.entropy_bits - b.entropy_bits) < 1e-12);
        CHECK(std::abs(a.schmidt[0] - b.schmidt[0]) < 1e-12);
        CHECK(std::abs(a.schmidt[1] - b.schmidt[1]) < 1e-12);
        CHECK(std::abs(a.eigenvalues[0] - b.eigenvalues[0]) < 1e-12);
        CHECK(std::abs(a.eigenvalues[1] - b.eigenvalues[1]) < 1e-12);
    }
}

TEST_CASE("maximal out-state") {
    for (double delta1 : {0.0, 0.3, -1.2, 2.9}) {
        const TwoSpinState out = maximal_out_state(delta1);
        REQUIRE(out.basis() == Basis::Coupled);
        CHECK(entanglement_entropy(out).entropy_bits ==
              doctest::Approx(1.0).epsilon(1e-12));

        // equals the pipeline at theta = pi/2, delta0 = delta1 + pi/4
        const TwoSpinState pipeline = apply_spin_smatrix(
            to_coupled(in_state_from_angle(kPi / 2)),
            SpinPhasePair{delta1 + kPi / 4, delta1});
        CHECK((out.amplitudes() - pipeline.amplitudes()).cwiseAbs().maxCoeff() <
              1e-14);

        // product form (exp(2 i delta1)/2) ((1+i)|+-> + (1-i)|-+>)
        const TwoSpinState product = to_product(out);
        const Complex phase = channel_phase(delta1);
        CHECK(std::abs(product.amplitude(1) - 0.5 * phase * Complex(1, 1)) < 1e-14);
        CHECK(std::abs(product.amplitude(2) - 0.5 * phase * Complex(1, -1)) < 1e-14);
        CHECK(std::abs(product.amplitude(0)) < 1e-14);
        CHECK(std::abs(product.amplitude(3)) < 1e-14);
    }
    // delta1 = 0 leaves no overall phase
    const TwoSpinState plain = maximal_out_state(0.0);
    CHECK(std::abs(plain.amplitude(0) - Complex(0.0, kInvSqrt2)) < 1e-15);
    CHECK(std::abs(plain.amplitude(2) - Complex(kInvSqrt2, 0.0)) < 1e-15);
}

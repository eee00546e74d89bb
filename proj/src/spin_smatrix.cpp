#include "spinscatter/spin_smatrix.hpp"

#include <cmath>
#include <numbers>

namespace spinscatter {

namespace {

Eigen::Vector4cd coupled_phases(const SpinPhasePair &phases) {
    const Complex singlet = std::exp(Complex(0.0, 2.0 * phases.delta0));
    const Complex triplet = std::exp(Complex(0.0, 2.0 * phases.delta1));
    return {singlet, triplet, triplet, triplet};
}

} // namespace

TwoSpinState apply_spin_smatrix(const TwoSpinState &state,
                                const SpinPhasePair &phases) {
    const bool was_product = state.basis() == Basis::Product;
    const TwoSpinState coupled = was_product ? to_coupled(state) : state;
    const TwoSpinState out(
        Basis::Coupled,
        coupled_phases(phases).cwiseProduct(coupled.amplitudes()));
    return was_product ? to_product(out) : out;
}

Eigen::Matrix4cd smatrix_as_operator(const SpinPhasePair &phases) {
    const Eigen::Matrix4d &m = product_to_coupled_matrix();
    return m.transpose() * coupled_phases(phases).asDiagonal() * m;
}

TwoSpinState maximal_out_state(double delta1) {
    const Complex phase = std::exp(Complex(0.0, 2.0 * delta1));
    const double r = 1.0 / std::numbers::sqrt2;
    return TwoSpinState(
        Basis::Coupled,
        Eigen::Vector4cd(Complex(0.0, r) * phase, 0.0, r * phase, 0.0));
}

} // namespace spinscatter

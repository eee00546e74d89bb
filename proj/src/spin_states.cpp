#include "spinscatter/spin_states.hpp"

#include <cmath>
#include <numbers>

namespace spinscatter {

namespace {

constexpr double kNormTolerance = 1e-12;

void require_normalized(double squared_norm, const char *who) {
    if (std::abs(squared_norm - 1.0) > kNormTolerance)
        throw InputError(std::string(who) + ": state is not normalized");
}

constexpr AngularMomentum kHalf{1};

} // namespace

SingleSpinState::SingleSpinState(Complex up, Complex down)
    : SingleSpinState(Eigen::Vector2cd(up, down)) {}

SingleSpinState::SingleSpinState(const Eigen::Vector2cd &amplitudes)
    : amps_(amplitudes) {
    require_normalized(amps_.squaredNorm(), "SingleSpinState");
}

TwoSpinState::TwoSpinState(Basis basis, const Eigen::Vector4cd &amplitudes)
    : basis_(basis), amps_(amplitudes) {
    require_normalized(amps_.squaredNorm(), "TwoSpinState");
}

TwoSpinState product_state(const SingleSpinState &a, const SingleSpinState &b) {
    Eigen::Vector4cd amps;
    amps << a.up() * b.up(), a.up() * b.down(), a.down() * b.up(),
        a.down() * b.down();
    return TwoSpinState(Basis::Product, amps);
}

TwoSpinState in_state_from_angle(double theta) {
    if (!(theta >= 0.0 && theta < std::numbers::pi))
        throw InputError("in_state_from_angle: theta must lie in [0, pi)");
    return TwoSpinState(Basis::Product,
                        Eigen::Vector4cd(std::cos(theta), std::sin(theta), 0.0, 0.0));
}

const Eigen::Matrix4d &product_to_coupled_matrix() {
    static const Eigen::Matrix4d transform = [] {
        // Coupled rows (s, chi): (0,0), (1,-1), (1,0), (1,+1).
        constexpr std::array<std::pair<int, int>, 4> coupled = {
            {{0, 0}, {2, -2}, {2, 0}, {2, 2}}};
        // Product columns (chi1, chi2) doubled: ++, +-, -+, --.
        constexpr std::array<std::pair<int, int>, 4> product = {
            {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
        Eigen::Matrix4d m;
        for (int row = 0; row < 4; ++row)
            for (int col = 0; col < 4; ++col)
                m(row, col) = cgc(kHalf, product[col].first, kHalf,
                                  product[col].second,
                                  AngularMomentum(coupled[row].first),
                                  coupled[row].second);
        return m;
    }();
    return transform;
}

TwoSpinState to_coupled(const TwoSpinState &state) {
    if (state.basis() != Basis::Product)
        throw InputError("to_coupled: expected a Product-basis state");
    return TwoSpinState(Basis::Coupled,
                        product_to_coupled_matrix() * state.amplitudes());
}

TwoSpinState to_product(const TwoSpinState &state) {
    if (state.basis() != Basis::Coupled)
        throw InputError("to_product: expected a Coupled-basis state");
    return TwoSpinState(Basis::Product,
                        product_to_coupled_matrix().transpose() * state.amplitudes());
}

std::array<TwoSpinState, 4> magic_basis() {
    const double r = 1.0 / std::numbers::sqrt2;
    return {TwoSpinState(Basis::Product, Eigen::Vector4cd(0, r, r, 0)),
            TwoSpinState(Basis::Product, Eigen::Vector4cd(0, r, -r, 0)),
            TwoSpinState(Basis::Product, Eigen::Vector4cd(r, 0, 0, r)),
            TwoSpinState(Basis::Product, Eigen::Vector4cd(r, 0, 0, -r))};
}

TwoSpinState rotate(const TwoSpinState &state, const Rotation &r) {
    if (state.basis() != Basis::Product)
        throw InputError("rotate: expected a Product-basis state");
    const Eigen::MatrixXcd d = wigner_D_matrix(kHalf, r);
    Eigen::Matrix4cd both;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            both.block<2, 2>(2 * i, 2 * k) = d(i, k) * d;
    return TwoSpinState(Basis::Product, both * state.amplitudes());
}

} // namespace spinscatter

#include "spinscatter/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace spinscatter {

namespace {

constexpr double kMatrixTolerance = 1e-12;
constexpr double kClampWindow = 1e-12;

double clamp_probability(double e, const char *who) {
    if (e < -kClampWindow || e > 1.0 + kClampWindow)
        throw InputError(std::string(who) + ": eigenvalue outside [0, 1]");
    return std::clamp(e, 0.0, 1.0);
}

double binary_entropy_term(double p) {
    return p > 0.0 ? -p * std::log2(p) : 0.0;
}

// Eigenvalues of a Hermitian 2x2 with the trace/determinant quadratic.
std::array<double, 2> hermitian2_eigenvalues(const Eigen::Matrix2cd &m) {
    const double tr = m.trace().real();
    const double det = m.determinant().real();
    const double disc = std::max(0.25 * tr * tr - det, 0.0);
    const double root = std::sqrt(disc);
    return {0.5 * tr + root, 0.5 * tr - root};
}

// 2x2 amplitude matrix C with |psi> = sum C_{chi1 chi2} |chi1 chi2>.
Eigen::Matrix2cd amplitude_matrix(const TwoSpinState &state) {
    const Eigen::Vector4cd &a = state.amplitudes();
    Eigen::Matrix2cd c;
    c << a(0), a(1), a(2), a(3);
    return c;
}

} // namespace

ReducedDensity::ReducedDensity(const Eigen::Matrix2cd &rho) : rho_(rho) {
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kMatrixTolerance)
        throw InputError("ReducedDensity: matrix is not Hermitian");
    if (std::abs(rho_.trace().real() - 1.0) > kMatrixTolerance ||
        std::abs(rho_.trace().imag()) > kMatrixTolerance)
        throw InputError("ReducedDensity: trace is not 1");
    const auto eigs = hermitian2_eigenvalues(rho_);
    if (eigs[1] < -kMatrixTolerance)
        throw InputError("ReducedDensity: matrix is not positive semidefinite");
}

std::array<double, 2> ReducedDensity::eigenvalues() const {
    const auto eigs = hermitian2_eigenvalues(rho_);
    return {clamp_probability(eigs[0], "ReducedDensity"),
            clamp_probability(eigs[1], "ReducedDensity")};
}

ReducedDensity reduced_density(const TwoSpinState &state, int keep) {
    if (state.basis() != Basis::Product)
        throw InputError("reduced_density: expected a Product-basis state");
    if (keep != 1 && keep != 2)
        throw InputError("reduced_density: keep must be 1 or 2");
    const Eigen::Matrix2cd c = amplitude_matrix(state);
    const Eigen::Matrix2cd rho =
        keep == 1 ? Eigen::Matrix2cd(c * c.adjoint())
                  : Eigen::Matrix2cd(c.transpose() * c.conjugate());
    return ReducedDensity(rho);
}

double von_neumann_entropy(const ReducedDensity &rho) {
    const auto eigs = rho.eigenvalues();
    return binary_entropy_term(eigs[0]) + binary_entropy_term(eigs[1]);
}

EntanglementReport entanglement_entropy(const TwoSpinState &state) {
    const TwoSpinState product =
        state.basis() == Basis::Product ? state : to_product(state);

    // Both marginals share trace 1 and det = |det C|^2, so one determinant
    // fixes the common spectrum.
    const Eigen::Matrix2cd c = amplitude_matrix(product);
    const double det2 = std::norm(c.determinant());
    const double x = std::sqrt(std::max(1.0 - 4.0 * det2, 0.0));

    EntanglementReport report;
    report.eigenvalues = {0.5 * (1.0 + x), 0.5 * (1.0 - x)};
    report.schmidt = {std::sqrt(report.eigenvalues[0]),
                      std::sqrt(report.eigenvalues[1])};
    report.entropy_bits = binary_entropy_term(report.eigenvalues[0]) +
                          binary_entropy_term(report.eigenvalues[1]);
    return report;
}

double closed_form_entanglement(double theta, double delta0, double delta1) {
    const double s = std::sin(theta);
    const double sd = std::sin(2.0 * (delta0 - delta1));
    const double x2 = 1.0 - s * s * s * s * sd * sd;
    const double x = std::sqrt(std::clamp(x2, 0.0, 1.0));
    return binary_entropy_term(0.5 * (1.0 + x)) +
           binary_entropy_term(0.5 * (1.0 - x));
}

} // namespace spinscatter

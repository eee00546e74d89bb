#pragma once

#include <array>

#include <Eigen/Dense>

#include "spinscatter/spin_states.hpp"

namespace spinscatter {

// Single-particle marginal of a pure two-spin state: Hermitian, unit trace,
// positive semidefinite. Construction validates all three.
class ReducedDensity {
  public:
    explicit ReducedDensity(const Eigen::Matrix2cd &rho);

    const Eigen::Matrix2cd &matrix() const { return rho_; }

    // Closed-form (trace/determinant) eigenvalues, descending, clamped to
    // [0, 1] when within 1e-12 of the boundary.
    std::array<double, 2> eigenvalues() const;

  private:
    Eigen::Matrix2cd rho_;
};

struct EntanglementReport {
    std::array<double, 2> schmidt;     // lambda+ >= lambda-, squares sum to 1
    std::array<double, 2> eigenvalues; // (1+x)/2, (1-x)/2 of either marginal
    double entropy_bits;               // in [0, 1]
};

// Partial trace over the particle NOT kept; keep is 1 or 2.
// The state must be normalized and in the Product basis.
ReducedDensity reduced_density(const TwoSpinState &state, int keep);

// -tr[rho log2 rho] with the 0 log 0 = 0 convention.
double von_neumann_entropy(const ReducedDensity &rho);

// Entropy of entanglement of a pure state (either basis accepted), with the
// Schmidt coefficients and marginal eigenvalues alongside.
EntanglementReport entanglement_entropy(const TwoSpinState &state);

// E generated by scattering the product in-state at angle theta through
// channel phases (delta0, delta1):
//   E = 1 - (1/2) log2((1+x)^(1+x) (1-x)^(1-x)),
//   x = sqrt(1 - sin^4(theta) sin^2(2 (delta0 - delta1))).
double closed_form_entanglement(double theta, double delta0, double delta1);

} // namespace spinscatter

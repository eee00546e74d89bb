#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "spinscatter/su2.hpp"

namespace spinscatter {

using Complex = std::complex<double>;

// Amplitude ordering conventions, fixed project-wide:
//   Product basis: (++, +-, -+, --), first sign is particle 1.
//   Coupled basis: (|00>, |1 -1>, |10>, |11>), singlet first, then the
//   triplet with ascending projection.
enum class Basis { Product, Coupled };

// One spin-1/2, amplitudes (+, -). Construction rejects unnormalized input.
class SingleSpinState {
  public:
    SingleSpinState(Complex up, Complex down);
    explicit SingleSpinState(const Eigen::Vector2cd &amplitudes);

    const Eigen::Vector2cd &amplitudes() const { return amps_; }
    Complex up() const { return amps_(0); }
    Complex down() const { return amps_(1); }

  private:
    Eigen::Vector2cd amps_;
};

// Pure two-spin-1/2 state: four amplitudes in a declared basis, unit norm.
// Global phases are physical here and never canonicalized away.
class TwoSpinState {
  public:
    TwoSpinState(Basis basis, const Eigen::Vector4cd &amplitudes);

    Basis basis() const { return basis_; }
    const Eigen::Vector4cd &amplitudes() const { return amps_; }
    Complex amplitude(int i) const { return amps_(i); }

  private:
    Basis basis_;
    Eigen::Vector4cd amps_;
};

// |phi_1> (x) |phi_2>, always a zero-entanglement Product-basis state.
TwoSpinState product_state(const SingleSpinState &a, const SingleSpinState &b);

// cos(theta)|++> + sin(theta)|+->, theta in [0, pi): the canonical product
// in-state with theta the angle between the two polarization directions.
TwoSpinState in_state_from_angle(double theta);

// Basis changes through the real orthogonal Clebsch-Gordan transform.
// to_coupled requires a Product-basis state; to_product a Coupled one.
TwoSpinState to_coupled(const TwoSpinState &state);
TwoSpinState to_product(const TwoSpinState &state);

// The four maximally entangled kets in the Product basis, in the order
// EPR+, EPR-, Bell+: (|++> + |-->)/sqrt2, Bell-.
std::array<TwoSpinState, 4> magic_basis();

// Same rotation applied to both spins of a Product-basis state.
TwoSpinState rotate(const TwoSpinState &state, const Rotation &r);

// Coupled <- Product change of basis assembled from cgc; row i is the i-th
// coupled ket, column k the k-th product ket (orderings as in Basis).
const Eigen::Matrix4d &product_to_coupled_matrix();

} // namespace spinscatter

#pragma once

#include <Eigen/Dense>

#include "spinscatter/spin_states.hpp"

namespace spinscatter {

// Channel half-phases of a rotationally invariant two-spin S-matrix: the
// singlet block acquires exp(2i delta0), the triplet exp(2i delta1).
// Values differing by pi describe the same physical S-matrix; they are
// kept as given, not canonicalized.
struct SpinPhasePair {
    double delta0 = 0.0;
    double delta1 = 0.0;

    double difference() const { return delta0 - delta1; } // Delta-delta
};

// Scatter a normalized state: diagonal phase action in the Coupled basis,
// result returned in the caller's basis. Norm is preserved.
TwoSpinState apply_spin_smatrix(const TwoSpinState &state,
                                const SpinPhasePair &phases);

// The same operator as an explicit unitary on Product-basis amplitudes.
Eigen::Matrix4cd smatrix_as_operator(const SpinPhasePair &phases);

// Out-state of the maximal-entanglement case theta = pi/2, 2*Delta-delta =
// +pi/2: (exp(2i delta1)/sqrt2) (|10> + i|00>), in the Coupled basis.
TwoSpinState maximal_out_state(double delta1);

} // namespace spinscatter

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "spinscatter/errors.hpp"

namespace spinscatter {

// Labels above j = 20 are rejected; the exact factorial table stops there.
inline constexpr int kMaxTwiceJ = 40;

// Angular momentum magnitude stored as 2j, so half-integer labels stay exact.
class AngularMomentum {
  public:
    constexpr explicit AngularMomentum(int twice_j) : twice_j_(twice_j) {
        if (twice_j < 0)
            throw InputError("AngularMomentum: 2j must be non-negative");
    }

    static constexpr AngularMomentum from_integer(int j) {
        return AngularMomentum(2 * j);
    }

    constexpr int twice() const { return twice_j_; }
    constexpr bool is_integer() const { return twice_j_ % 2 == 0; }
    constexpr int multiplicity() const { return twice_j_ + 1; } // 2j+1
    double value() const { return 0.5 * twice_j_; }

    friend constexpr bool operator==(AngularMomentum a, AngularMomentum b) {
        return a.twice_j_ == b.twice_j_;
    }
    friend constexpr bool operator<(AngularMomentum a, AngularMomentum b) {
        return a.twice_j_ < b.twice_j_;
    }

  private:
    int twice_j_;
};

// A projection label 2m is valid for j when |m| <= j and m, j share parity.
constexpr bool valid_projection(AngularMomentum j, int twice_m) {
    const int magnitude = twice_m < 0 ? -twice_m : twice_m;
    return magnitude <= j.twice() && (twice_m - j.twice()) % 2 == 0;
}

// Euler angles in radians, z-y-z convention (alpha about z, beta about y,
// gamma about z). Any finite real values are accepted.
struct Rotation {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

// Clebsch-Gordan coefficient <j m | j1 m1; j2 m2> in the Condon-Shortley
// convention (all coefficients real, <j1 j1; j2 j-j1 | j j> > 0).
// Returns 0 when m != m1 + m2 or when j fails the triangle rule.
// Projections are passed doubled (2m); malformed labels raise InputError.
double cgc(AngularMomentum j1, int twice_m1, AngularMomentum j2, int twice_m2,
           AngularMomentum j, int twice_m);

// Wigner small-d matrix element d^j_{m'm}(beta), real by the z-y-z choice.
double wigner_d_small(AngularMomentum j, int twice_mprime, int twice_m,
                      double beta);

// Full Wigner D: exp(-i m' alpha) d^j_{m'm}(beta) exp(-i m gamma).
std::complex<double> wigner_D(AngularMomentum j, int twice_mprime, int twice_m,
                              const Rotation &r);

// D^j(r) as a (2j+1) x (2j+1) matrix. Row/column i carries m = j - i,
// i.e. projections run from +j down to -j.
Eigen::MatrixXcd wigner_D_matrix(AngularMomentum j, const Rotation &r);

} // namespace spinscatter

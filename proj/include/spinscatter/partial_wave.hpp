#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spinscatter/spin_smatrix.hpp"

namespace spinscatter {

// Invariant labels {M, W, s} of a Galilean UIR.
struct GalileanInvariants {
    double mass = 0.0;            // total mass, > 0
    double internal_energy = 0.0; // W
    AngularMomentum spin{0};
};

// Internal energy W(q) = W1 + W2 + q^2 / (2 m0) of the equal-mass two-particle
// UIR at relative momentum q; m0 is the single-particle mass.
double internal_energy(double q, double m0, double w1 = 0.0, double w2 = 0.0);

// The {M = 2 m0, W(q), s} labels of the UIR an equal-mass pair lands in.
GalileanInvariants equal_mass_invariants(double q, double m0, AngularMomentum s,
                                         double w1 = 0.0, double w2 = 0.0);

// Degeneracy labels of one equal-mass partial-wave fiber: total momentum p,
// relative momentum magnitude q, orbital (l, m). A central-force S-matrix
// never mixes fibers, so states are modeled per fiber.
struct PartialWaveLabels {
    Eigen::Vector3d total_momentum = Eigen::Vector3d::Zero();
    double relative_momentum = 0.0; // q >= 0
    AngularMomentum l{0};
    int twice_m = 0;

    void validate() const; // InputError when q < 0, l half-odd, or m invalid
};

// An (l, s) scattering channel.
struct Channel {
    AngularMomentum l{0};
    AngularMomentum s{0};

    friend bool operator==(const Channel &a, const Channel &b) {
        return a.l == b.l && a.s == b.s;
    }
};

// Sampled phase shifts delta_{ls}(q), one curve per (l, s) channel over a
// strictly ascending q-grid. Immutable once loaded; lookups interpolate
// linearly and never extrapolate.
class PhaseShiftTable {
  public:
    // CSV with the exact header "l,s,q,delta"; each row is
    // "l,s,q,delta" with integer l >= 0, s in {0, 1}, decimals q and delta.
    // Rows of a given channel must come with strictly ascending q.
    // Violations raise TableLoadError carrying the 1-based line number.
    static PhaseShiftTable load(const std::filesystem::path &path);
    static PhaseShiftTable parse(std::istream &in, const std::string &source);

    void add_channel(int l, int s, std::vector<double> q,
                     std::vector<double> delta);

    bool has_channel(int l, int s) const;
    std::vector<std::pair<int, int>> channels() const;

    // Interpolated delta_{ls}(q); ChannelError when (l, s) is absent,
    // GridRangeError when q falls outside the sampled range.
    double lookup_phase(int l, int s, double q) const;
    std::pair<double, double> q_range(int l, int s) const;

    void save(std::ostream &out) const;

  private:
    struct Curve {
        std::vector<double> q;
        std::vector<double> delta;
    };
    std::map<std::pair<int, int>, Curve> channels_;
};

// Orbital-spin coupling transform between the product labels (m, chi) and
// the total-angular-momentum labels (j, j3): a real orthogonal matrix of
// dimension (2l+1)(2s+1). Rows follow total_j_labels (j ascending from
// |l-s| to l+s, j3 ascending within j); columns follow orbital_spin_labels
// (m ascending outer, chi ascending inner). l must be an integer.
Eigen::MatrixXd couple_orbital_spin(AngularMomentum l, AngularMomentum s);
std::vector<std::pair<int, int>> total_j_labels(AngularMomentum l,
                                                AngularMomentum s); // (2j, 2j3)
std::vector<std::pair<int, int>> orbital_spin_labels(AngularMomentum l,
                                                     AngularMomentum s); // (2m, 2chi)

// Spin fiber of the out-state when the central-force S-matrix hits the
// product in-state a (x) b in the partial wave described by labels: the
// double Clebsch-Gordan sum with channel phases delta_{l0}(q), delta_{l1}(q).
// The fiber labels themselves pass through unchanged.
TwoSpinState apply_central_smatrix(const SingleSpinState &a,
                                   const SingleSpinState &b,
                                   const PartialWaveLabels &labels,
                                   const PhaseShiftTable &table);

// Reduced S-matrix block over coupled (l, s) channels at fixed total j and q.
struct ChannelBlockS {
    AngularMomentum j{0};
    double q = 0.0;
    std::vector<Channel> channels;
    Eigen::MatrixXcd block;
};

// Central-force block: diag(exp(2i delta_{ls}(q))) over the given channels.
ChannelBlockS central_block(AngularMomentum j, double q,
                            const std::vector<Channel> &channels,
                            const PhaseShiftTable &table);

// block * amplitudes over the channel list (fixed j, j3, q).
Eigen::VectorXcd apply_block(const ChannelBlockS &s,
                             const Eigen::VectorXcd &amplitudes);

struct BlockViolation {
    enum class Kind {
        ShapeMismatch,
        DuplicateChannel,
        ChannelOutsideTriangle,
        NonIntegerOrbital,
        NonUnitary,
    };
    Kind kind;
    std::string detail;
};

struct BlockValidation {
    std::vector<BlockViolation> violations;
    bool central = false; // diagonal to 1e-12, i.e. central-force form

    bool valid() const { return violations.empty(); }
};

// Structural checks on a reduced S-matrix block: square shape, distinct
// channels, |l-s| <= j <= l+s per channel, unitarity to 1e-10. Violations
// are returned as data, never thrown.
BlockValidation validate_block_s(const ChannelBlockS &block);

// Channel filter for identical spin-1/2 fermions: the totally antisymmetric
// channels are exactly those with l + s even.
bool fermion_channel_allowed(AngularMomentum l, AngularMomentum s);

} // namespace spinscatter

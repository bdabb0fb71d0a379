#pragma once

#include <Eigen/Dense>

namespace qtherm {

// Qubit states live on or inside the Bloch unit sphere. Basis convention:
// |H> is the ground state at -Z, |V> the excited state at +Z, and density
// matrices are indexed {|H>, |V>}.
using BlochVector = Eigen::Vector3d;
using DensityMatrix = Eigen::Matrix2cd;

struct KrausPair {
  Eigen::Matrix2cd k1;
  Eigen::Matrix2cd k2;
};

// Numeric slack allowed on state invariants (norms, traces, eigenvalues).
inline constexpr double kStateTol = 1e-12;

// States produced by purely real (x-z plane) dynamics must satisfy
// |s_y| <= kPlanarTol before plane-restricted optimizers accept them.
inline constexpr double kPlanarTol = 1e-9;

bool is_valid_bloch(const BlochVector& r, double tol = kStateTol);
void validate_bloch(const BlochVector& r, double tol = kStateTol);

bool is_valid_density(const DensityMatrix& rho, double tol = kStateTol);
void validate_density(const DensityMatrix& rho, double tol = kStateTol);

/// Rank-1 projector |theta><theta| with |theta> = cos(theta)|H> + sin(theta)|V>.
/// The angle is canonicalized to [0, pi); theta and theta + pi denote the same
/// projector.
class Projector {
 public:
  explicit Projector(double theta);

  double theta() const { return theta_; }

  /// Bloch-sphere direction of the projector, (sin 2theta, 0, -cos 2theta).
  BlochVector axis() const;

  Eigen::Matrix2cd matrix() const;

 private:
  double theta_;
};

}  // namespace qtherm

#pragma once

#include "qtherm/bloch.hpp"

namespace qtherm {

/// rho = (I + r . sigma)/2 with the z axis oriented so that (0,0,-1) maps to
/// |H><H| = diag(1, 0). Rejects |r| > 1 (within slack).
DensityMatrix bloch_to_density(const BlochVector& r);

/// Exact inverse of bloch_to_density. Rejects invariant-violating input.
BlochVector density_to_bloch(const DensityMatrix& rho);

/// Tr(rho M) = (1 + r . m)/2 where m is the projector's Bloch axis.
double measure_prob(const BlochVector& state, const Projector& m);

double euclidean_distance(const BlochVector& r1, const BlochVector& r2);

/// Minimum achievable error probability for discriminating two states drawn
/// with equal priors: 1/2 - |r1 - r2|/4.
double helstrom_pe(const BlochVector& r1, const BlochVector& r2);

/// Uhlmann fidelity Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)), evaluated through the
/// single-qubit closed form
///   F = sqrt[(1 + r1.r2 + sqrt((1-|r1|^2)(1-|r2|^2))) / 2].
/// Tiny negative radicands (>= -kStateTol) are clamped to zero.
double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);
double fidelity(const BlochVector& r1, const BlochVector& r2);

}  // namespace qtherm

#pragma once

#include <cstdint>
#include <utility>

#include "qtherm/bloch.hpp"
#include "qtherm/thermal.hpp"

namespace qtherm {

/// Hypothesis probabilities (pi1, pi2), pi1 + pi2 = 1.
struct PriorPair {
  PriorPair(double pi1, double pi2);
  static PriorPair equal() { return {0.5, 0.5}; }

  double pi1;
  double pi2;
};

/// Two hypothesis states with priors, probed with N identically prepared
/// qubits.
struct DiscriminationProblem {
  BlochVector rho1;
  BlochVector rho2;
  PriorPair priors = PriorPair::equal();
  int n_qubits = 1;
};

/// Error probability of the better of the two labelings of a single
/// projective measurement:
///   min{ pi1 q1 + pi2 (1 - q2), pi1 (1 - q1) + pi2 q2 },  q_i = Tr(rho_i M).
double pe_single(const DiscriminationProblem& prob, const Projector& m);

struct AngleResult {
  double theta;
  double pe;
};

/// Measurement angle minimizing the single-qubit error under the problem's
/// priors. Degenerate-threshold declarations (ignore the outcome, call the
/// larger prior) are part of the candidate set, so certainty priors give
/// pe = 0 at the canonical angle. Requires both states in the x-z plane.
AngleResult optimal_angle_single(const DiscriminationProblem& prob);

/// Thermalized states reached from one input after time t in the hot and the
/// cold bath.
std::pair<BlochVector, BlochVector> output_pair(const BlochVector& input,
                                                const ThermalBath& hot,
                                                const ThermalBath& cold,
                                                double t);

/// Count threshold k with a labeling: labeling 1 declares rho1 when the
/// number of successful outcomes is >= k, labeling 2 declares rho2. k = 0 and
/// k = N + 1 are the outcome-independent declarations.
struct ThresholdResult {
  int threshold;
  int labeling;
  double pe;
};

/// Best threshold strategy for a fixed measurement applied to all N qubits.
/// Ties prefer the smaller k, then labeling 1.
ThresholdResult pe_static_multi(const DiscriminationProblem& prob,
                                const Projector& m);

struct MultiResult {
  double theta;
  int threshold;
  int labeling;
  double pe;
};

/// Minimizes pe_static_multi over the measurement angle.
MultiResult optimal_static_multi(const DiscriminationProblem& prob);

/// Squared difference of two binomially estimated outcome means over the
/// larger of their analytic variances p(1-p)/n. Zero iff the means agree;
/// +infinity when the means differ but both variances vanish.
double distinguishability(double p_hot, double p_cold, std::int64_t n_shots);

/// Proportion of successes among n Bernoulli(p) draws, deterministic per
/// seed.
double simulate_shots(double p, std::int64_t n, std::uint64_t seed);

struct FidelityBound {
  double fidelity;
  /// (1 - F)/2, the asymptotic many-copy error ceiling.
  double bound;
};

FidelityBound fidelity_bound(const DensityMatrix& rho1,
                             const DensityMatrix& rho2);
FidelityBound fidelity_bound(const BlochVector& r1, const BlochVector& r2);

}  // namespace qtherm

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qtherm/bloch.hpp"
#include "qtherm/discrimination.hpp"

namespace qtherm {

struct Observation {
  double theta;
  bool success;
};

/// Posterior over the two hypotheses together with the measurements that
/// produced it.
struct BeliefState {
  PriorPair priors = PriorPair::equal();
  std::vector<Observation> history;
};

/// One Bayes step: the likelihood of hypothesis i is Tr(rho_i M) for a
/// successful outcome and 1 - Tr(rho_i M) otherwise. Throws if the observed
/// outcome has probability zero under both hypotheses.
BeliefState bayes_update(const BeliefState& belief, const BlochVector& rho1,
                         const BlochVector& rho2, const Projector& m,
                         bool success);

/// Greedy measurement choice: the angle minimizing the single-qubit error
/// under the current posterior. Flat objectives resolve to the canonical
/// smallest angle.
Projector next_angle(const BeliefState& belief, const BlochVector& rho1,
                     const BlochVector& rho2);

struct AdaptiveOptions {
  /// Exact enumeration refuses N beyond this (2^N leaves).
  int exact_depth_cap = 20;
  /// When > 0, every commanded angle is rounded to this step (radians),
  /// emulating finite mount precision. 0 disables quantization.
  double angle_step = 0.0;
};

/// Node of the enumerated outcome tree. Internal nodes carry the commanded
/// angle and the success probability under each hypothesis; leaves carry the
/// declared hypothesis (0 while internal). Posteriors are the belief BEFORE
/// the node's measurement.
struct OutcomeNode {
  double pi1;
  double pi2;
  double theta = 0.0;
  double p_succ_h1 = 0.0;
  double p_succ_h2 = 0.0;
  std::int32_t success_child = -1;
  std::int32_t failure_child = -1;
  std::int32_t declared = 0;
};

struct OutcomeTree {
  std::vector<OutcomeNode> nodes;  // root at index 0
  int depth = 0;
};

struct AdaptiveExact {
  double pe;
  OutcomeTree tree;
};

/// Enumerates every outcome path of the greedy Bayesian strategy and sums the
/// exact error probability: at each leaf the larger posterior is declared
/// (ties declare hypothesis 1). Refuses N beyond options.exact_depth_cap.
AdaptiveExact adaptive_pe_exact(const BlochVector& rho1,
                                const BlochVector& rho2,
                                const PriorPair& priors, int n,
                                const AdaptiveOptions& options = {});

struct AdaptiveRun {
  int decision;  // 1 or 2
  BeliefState belief;
};

/// Samples one root-to-leaf path using the true hypothesis' outcome
/// statistics. Deterministic for a fixed seed.
AdaptiveRun adaptive_simulate(int truth, const BlochVector& rho1,
                              const BlochVector& rho2, const PriorPair& priors,
                              int n, std::uint64_t seed,
                              const AdaptiveOptions& options = {});

/// Continues a run from an existing belief, drawing from the supplied engine;
/// lets a finished run roll forward when more qubits become available.
AdaptiveRun adaptive_continue(const BeliefState& belief, int truth,
                              const BlochVector& rho1, const BlochVector& rho2,
                              int n_more, std::mt19937_64& rng,
                              const AdaptiveOptions& options = {});

struct StrategyRow {
  int n;
  double pe_single_static;  // 1-qubit-optimal angle reused for all N
  double pe_global_static;  // angle optimized per N
  double pe_adaptive;       // exact tree enumeration
};

/// Error probabilities of the three strategies for N = 1..n_max.
std::vector<StrategyRow> strategy_compare(const BlochVector& rho1,
                                          const BlochVector& rho2,
                                          const PriorPair& priors, int n_max,
                                          const AdaptiveOptions& options = {});

}  // namespace qtherm

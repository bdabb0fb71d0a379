#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtherm/adaptive.hpp"
#include "qtherm/discrimination.hpp"
#include "qtherm/thermal.hpp"

namespace qtherm {

/// Bloch components of the hot- and cold-bath trajectories; one row per
/// (time, bath).
struct TrajectoryRow {
  double t;
  std::string bath_label;  // "hot" or "cold"
  double sx;
  double sz;
};

std::vector<TrajectoryRow> trajectory_sweep(const ThermalBath& hot,
                                            const ThermalBath& cold,
                                            const BlochVector& input,
                                            const std::vector<double>& times);

/// Optimal single-qubit measurement and its error at each interaction time.
struct PeCurveRow {
  double t;
  double theta_opt;
  double pe_hot_vs_cold;
};

std::vector<PeCurveRow> pe_curve_sweep(const ThermalBath& hot,
                                       const ThermalBath& cold,
                                       const BlochVector& input,
                                       const std::vector<double>& times);

/// Best static N-qubit error plus the fidelity diagnostics at each time.
struct MultiqubitRow {
  double t;
  double pe_n;
  double fidelity;
  double fidelity_bound;
};

std::vector<MultiqubitRow> multiqubit_sweep(const ThermalBath& hot,
                                            const ThermalBath& cold,
                                            const BlochVector& input,
                                            int n_qubits,
                                            const std::vector<double>& times);

/// Analytic distinguishability of the optimal observable's outcome, plus an
/// empirical estimate from seeded replicated shot simulations.
struct DistinguishabilityRow {
  double t;
  double d_analytic;
  double d_empirical;
};

std::vector<DistinguishabilityRow> distinguishability_sweep(
    const ThermalBath& hot, const ThermalBath& cold, const BlochVector& input,
    std::int64_t n_shots, int replicates, std::uint64_t seed,
    const std::vector<double>& times);

/// strategy_compare plus a Monte Carlo estimate of the adaptive error.
struct AdaptiveSweepRow {
  int n;
  double pe_1qubit_static;
  double pe_global_static;
  double pe_adaptive_exact;
  double pe_adaptive_mc;
  double pe_adaptive_mc_stderr;
};

std::vector<AdaptiveSweepRow> adaptive_sweep(const BlochVector& rho1,
                                             const BlochVector& rho2,
                                             const PriorPair& priors,
                                             int n_max, std::int64_t mc_trials,
                                             std::uint64_t seed,
                                             const AdaptiveOptions& options = {});

}  // namespace qtherm

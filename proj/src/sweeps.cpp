#include "qtherm/sweeps.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qtherm/states.hpp"
#include "qtherm/stats.hpp"

namespace qtherm {

std::vector<TrajectoryRow> trajectory_sweep(const ThermalBath& hot,
                                            const ThermalBath& cold,
                                            const BlochVector& input,
                                            const std::vector<double>& times) {
  const std::vector<BlochVector> from_hot = trajectory(hot, input, times);
  const std::vector<BlochVector> from_cold = trajectory(cold, input, times);
  std::vector<TrajectoryRow> rows;
  rows.reserve(2 * times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    rows.push_back({times[i], "hot", from_hot[i].x(), from_hot[i].z()});
    rows.push_back({times[i], "cold", from_cold[i].x(), from_cold[i].z()});
  }
  return rows;
}

std::vector<PeCurveRow> pe_curve_sweep(const ThermalBath& hot,
                                       const ThermalBath& cold,
                                       const BlochVector& input,
                                       const std::vector<double>& times) {
  std::vector<PeCurveRow> rows;
  rows.reserve(times.size());
  for (const double t : times) {
    const auto [from_hot, from_cold] = output_pair(input, hot, cold, t);
    const AngleResult best = optimal_angle_single(
        DiscriminationProblem{from_hot, from_cold, PriorPair::equal(), 1});
    rows.push_back({t, best.theta, best.pe});
  }
  return rows;
}

std::vector<MultiqubitRow> multiqubit_sweep(const ThermalBath& hot,
                                            const ThermalBath& cold,
                                            const BlochVector& input,
                                            int n_qubits,
                                            const std::vector<double>& times) {
  std::vector<MultiqubitRow> rows;
  rows.reserve(times.size());
  for (const double t : times) {
    const auto [from_hot, from_cold] = output_pair(input, hot, cold, t);
    const MultiResult best = optimal_static_multi(
        DiscriminationProblem{from_hot, from_cold, PriorPair::equal(),
                              n_qubits});
    const FidelityBound fb = fidelity_bound(from_hot, from_cold);
    rows.push_back({t, best.pe, fb.fidelity, fb.bound});
  }
  return rows;
}

std::vector<DistinguishabilityRow> distinguishability_sweep(
    const ThermalBath& hot, const ThermalBath& cold, const BlochVector& input,
    std::int64_t n_shots, int replicates, std::uint64_t seed,
    const std::vector<double>& times) {
  if (replicates < 2) {
    throw std::invalid_argument(
        "empirical variance needs at least 2 replicates");
  }
  std::vector<DistinguishabilityRow> rows;
  rows.reserve(times.size());
  std::uint64_t stream = 0;
  for (const double t : times) {
    const auto [from_hot, from_cold] = output_pair(input, hot, cold, t);
    const AngleResult best = optimal_angle_single(
        DiscriminationProblem{from_hot, from_cold, PriorPair::equal(), 1});
    const Projector m(best.theta);
    const double p_hot = measure_prob(from_hot, m);
    const double p_cold = measure_prob(from_cold, m);
    const double analytic = distinguishability(p_hot, p_cold, n_shots);

    // Empirical column: sample means/variances over seeded replicates, the
    // way repeated experimental datasets would estimate them.
    double mean_hot = 0.0, mean_cold = 0.0;
    std::vector<double> est_hot(replicates), est_cold(replicates);
    for (int r = 0; r < replicates; ++r) {
      est_hot[r] = simulate_shots(p_hot, n_shots, mix_seed(seed, stream++));
      est_cold[r] = simulate_shots(p_cold, n_shots, mix_seed(seed, stream++));
      mean_hot += est_hot[r];
      mean_cold += est_cold[r];
    }
    mean_hot /= replicates;
    mean_cold /= replicates;
    double var_hot = 0.0, var_cold = 0.0;
    for (int r = 0; r < replicates; ++r) {
      var_hot += (est_hot[r] - mean_hot) * (est_hot[r] - mean_hot);
      var_cold += (est_cold[r] - mean_cold) * (est_cold[r] - mean_cold);
    }
    var_hot /= replicates - 1;
    var_cold /= replicates - 1;
    const double var_max = std::max(var_hot, var_cold);
    const double diff = mean_hot - mean_cold;
    double empirical;
    if (var_max == 0.0) {
      empirical = diff == 0.0 ? 0.0
                              : std::numeric_limits<double>::infinity();
    } else {
      empirical = diff * diff / var_max;
    }
    rows.push_back({t, analytic, empirical});
  }
  return rows;
}

std::vector<AdaptiveSweepRow> adaptive_sweep(const BlochVector& rho1,
                                             const BlochVector& rho2,
                                             const PriorPair& priors,
                                             int n_max, std::int64_t mc_trials,
                                             std::uint64_t seed,
                                             const AdaptiveOptions& options) {
  if (mc_trials < 1) throw std::invalid_argument("mc_trials must be >= 1");
  const std::vector<StrategyRow> exact =
      strategy_compare(rho1, rho2, priors, n_max, options);
  std::vector<AdaptiveSweepRow> rows;
  rows.reserve(exact.size());
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (const StrategyRow& row : exact) {
    std::int64_t errors = 0;
    for (std::int64_t trial = 0; trial < mc_trials; ++trial) {
      std::mt19937_64 rng(
          mix_seed(seed, static_cast<std::uint64_t>(row.n) << 32 |
                             static_cast<std::uint64_t>(trial)));
      const int truth = uniform(rng) < priors.pi1 ? 1 : 2;
      const AdaptiveRun run = adaptive_continue(BeliefState{priors, {}}, truth,
                                                rho1, rho2, row.n, rng,
                                                options);
      if (run.decision != truth) ++errors;
    }
    const double pe_mc =
        static_cast<double>(errors) / static_cast<double>(mc_trials);
    const double stderr_mc =
        std::sqrt(pe_mc * (1.0 - pe_mc) / static_cast<double>(mc_trials));
    rows.push_back({row.n, row.pe_single_static, row.pe_global_static,
                    row.pe_adaptive, pe_mc, stderr_mc});
  }
  return rows;
}

}  // namespace qtherm

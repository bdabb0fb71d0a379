#include "qtherm/discrimination.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qtherm/scalar_minimize.hpp"
#include "qtherm/states.hpp"
#include "qtherm/stats.hpp"

namespace qtherm {

namespace {

void require_planar(const BlochVector& r) {
  if (std::abs(r.y()) > kPlanarTol) {
    throw std::invalid_argument(
        "angle optimization requires states in the x-z plane (|s_y| <= 1e-9)");
  }
}

// Error of the better labeling of one projective measurement.
double pe_two_labelings(const PriorPair& priors, double q1, double q2) {
  const double declare1_on_success = priors.pi1 * (1.0 - q1) + priors.pi2 * q2;
  const double declare2_on_success = priors.pi1 * q1 + priors.pi2 * (1.0 - q2);
  return std::min(declare1_on_success, declare2_on_success);
}

constexpr int kAngleGrid = 720;
constexpr double kAngleStep = M_PI / kAngleGrid;
constexpr double kAngleTol = 1e-10;
constexpr double kTieTol = 1e-12;

struct AngleTables {
  std::array<double, kAngleGrid> sin2t;
  std::array<double, kAngleGrid> cos2t;
};

const AngleTables& angle_tables() {
  static const AngleTables tables = [] {
    AngleTables t;
    for (int i = 0; i < kAngleGrid; ++i) {
      t.sin2t[i] = std::sin(2.0 * i * kAngleStep);
      t.cos2t[i] = std::cos(2.0 * i * kAngleStep);
    }
    return t;
  }();
  return tables;
}

double outcome_prob(const BlochVector& r, double sin2t, double cos2t) {
  return std::clamp(0.5 * (1.0 + r.x() * sin2t - r.z() * cos2t), 0.0, 1.0);
}

// Coarse 720-point scan over one half-turn (the projector's period) followed
// by golden-section refinement of the winning basin. Grid ties within kTieTol
// resolve to the smallest angle; a grid-flat objective short-circuits to
// theta = 0 so degenerate problems stay deterministic.
template <class PeFromProbs>
AngleResult minimize_over_angle(const BlochVector& r1, const BlochVector& r2,
                                PeFromProbs&& pe_from_probs) {
  validate_bloch(r1);
  validate_bloch(r2);
  require_planar(r1);
  require_planar(r2);
  const AngleTables& tables = angle_tables();
  int best = 0;
  double best_val = pe_from_probs(outcome_prob(r1, 0.0, 1.0),
                                  outcome_prob(r2, 0.0, 1.0));
  double worst_val = best_val;
  for (int i = 1; i < kAngleGrid; ++i) {
    const double v =
        pe_from_probs(outcome_prob(r1, tables.sin2t[i], tables.cos2t[i]),
                      outcome_prob(r2, tables.sin2t[i], tables.cos2t[i]));
    if (v < best_val - kTieTol) {
      best = i;
      best_val = v;
    }
    if (v > worst_val) worst_val = v;
  }
  if (worst_val - best_val <= kTieTol) {
    return {0.0, best_val};
  }
  const auto eval = [&](double theta) {
    const double s = std::sin(2.0 * theta);
    const double c = std::cos(2.0 * theta);
    return pe_from_probs(outcome_prob(r1, s, c), outcome_prob(r2, s, c));
  };
  ScalarMin refined = golden_section_min(eval, (best - 1) * kAngleStep,
                                         (best + 1) * kAngleStep, kAngleTol);
  if (best_val < refined.value) {
    refined = {best * kAngleStep, best_val};
  }
  return {Projector(refined.x).theta(), refined.value};
}

}  // namespace

PriorPair::PriorPair(double pi1_in, double pi2_in) : pi1(pi1_in), pi2(pi2_in) {
  if (!(pi1 >= 0.0 && pi1 <= 1.0) || !(pi2 >= 0.0 && pi2 <= 1.0) ||
      std::abs(pi1 + pi2 - 1.0) > kStateTol) {
    throw std::invalid_argument("priors must be probabilities summing to 1");
  }
}

double pe_single(const DiscriminationProblem& prob, const Projector& m) {
  if (prob.n_qubits != 1) {
    throw std::invalid_argument("pe_single is defined for N = 1");
  }
  const double q1 = measure_prob(prob.rho1, m);
  const double q2 = measure_prob(prob.rho2, m);
  return pe_two_labelings(prob.priors, q1, q2);
}

AngleResult optimal_angle_single(const DiscriminationProblem& prob) {
  if (prob.n_qubits != 1) {
    throw std::invalid_argument("optimal_angle_single is defined for N = 1");
  }
  const double floor_pe = std::min(prob.priors.pi1, prob.priors.pi2);
  return minimize_over_angle(
      prob.rho1, prob.rho2, [&](double q1, double q2) {
        return std::min(pe_two_labelings(prob.priors, q1, q2), floor_pe);
      });
}

std::pair<BlochVector, BlochVector> output_pair(const BlochVector& input,
                                                const ThermalBath& hot,
                                                const ThermalBath& cold,
                                                double t) {
  validate_bloch(input);
  return {apply_gad_bloch(channel_at(hot, t), input),
          apply_gad_bloch(channel_at(cold, t), input)};
}

namespace {

ThresholdResult best_threshold(const PriorPair& priors, int n, double q1,
                               double q2) {
  const std::vector<double> pmf1 = binomial_pmf_table(n, q1);
  const std::vector<double> pmf2 = binomial_pmf_table(n, q2);

  // tail_i[k] = P(count >= k | hypothesis i), accumulated from the top so
  // small tails are not formed as 1 - head.
  std::vector<double> tail1(n + 2, 0.0), tail2(n + 2, 0.0);
  for (int k = n; k >= 0; --k) {
    tail1[k] = tail1[k + 1] + pmf1[k];
    tail2[k] = tail2[k + 1] + pmf2[k];
  }

  ThresholdResult best{0, 1, std::numeric_limits<double>::infinity()};
  double head1 = 0.0, head2 = 0.0;  // P(count < k)
  for (int k = 0; k <= n + 1; ++k) {
    const double declare1_above = priors.pi1 * head1 + priors.pi2 * tail2[k];
    const double declare2_above = priors.pi2 * head2 + priors.pi1 * tail1[k];
    if (declare1_above < best.pe) best = {k, 1, declare1_above};
    if (declare2_above < best.pe) best = {k, 2, declare2_above};
    if (k <= n) {
      head1 += pmf1[k];
      head2 += pmf2[k];
    }
  }
  return best;
}

}  // namespace

ThresholdResult pe_static_multi(const DiscriminationProblem& prob,
                                const Projector& m) {
  if (prob.n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
  return best_threshold(prob.priors, prob.n_qubits,
                        measure_prob(prob.rho1, m), measure_prob(prob.rho2, m));
}

MultiResult optimal_static_multi(const DiscriminationProblem& prob) {
  if (prob.n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
  const AngleResult best = minimize_over_angle(
      prob.rho1, prob.rho2, [&](double q1, double q2) {
        return best_threshold(prob.priors, prob.n_qubits, q1, q2).pe;
      });
  const Projector m(best.theta);
  const ThresholdResult at_best = pe_static_multi(prob, m);
  return {m.theta(), at_best.threshold, at_best.labeling,
          std::min(at_best.pe, best.pe)};
}

double distinguishability(double p_hot, double p_cold, std::int64_t n_shots) {
  if (!(p_hot >= 0.0 && p_hot <= 1.0) || !(p_cold >= 0.0 && p_cold <= 1.0)) {
    throw std::invalid_argument("outcome probabilities must lie in [0, 1]");
  }
  if (n_shots < 1) throw std::invalid_argument("n_shots must be >= 1");
  const double diff = p_hot - p_cold;
  const double var1 = std::max(p_hot * (1.0 - p_hot), p_cold * (1.0 - p_cold));
  if (var1 == 0.0) {
    if (diff == 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  return static_cast<double>(n_shots) * (diff * diff / var1);
}

double simulate_shots(double p, std::int64_t n, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("probability must lie in [0, 1]");
  }
  if (n < 1) throw std::invalid_argument("shot count must be >= 1");
  std::mt19937_64 rng(seed);
  return static_cast<double>(binomial_sample(n, p, rng)) /
         static_cast<double>(n);
}

FidelityBound fidelity_bound(const BlochVector& r1, const BlochVector& r2) {
  const double f = fidelity(r1, r2);
  return {f, (1.0 - f) / 2.0};
}

FidelityBound fidelity_bound(const DensityMatrix& rho1,
                             const DensityMatrix& rho2) {
  return fidelity_bound(density_to_bloch(rho1), density_to_bloch(rho2));
}

}  // namespace qtherm

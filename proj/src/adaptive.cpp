#include "qtherm/adaptive.hpp"

#include <cmath>
#include <stdexcept>

#include "qtherm/states.hpp"
#include "qtherm/stats.hpp"

namespace qtherm {

namespace {

double quantize_angle(double theta, double step) {
  if (step <= 0.0) return theta;
  return Projector(std::round(theta / step) * step).theta();
}

Projector greedy_angle(const PriorPair& priors, const BlochVector& rho1,
                       const BlochVector& rho2, double angle_step) {
  const AngleResult best =
      optimal_angle_single(DiscriminationProblem{rho1, rho2, priors, 1});
  return Projector(quantize_angle(best.theta, angle_step));
}

class TreeBuilder {
 public:
  TreeBuilder(const BlochVector& rho1, const BlochVector& rho2,
              const AdaptiveOptions& options)
      : rho1_(rho1), rho2_(rho2), options_(options) {}

  // w1, w2 are pi_h * P(path | h); the posterior is their normalization.
  std::int32_t build(double w1, double w2, double parent_pi1, int remaining,
                     double& pe) {
    const std::int32_t index = static_cast<std::int32_t>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    OutcomeNode node;
    const double total = w1 + w2;
    // A zero-probability branch never occurs; carry the parent belief so the
    // node stays well-formed.
    node.pi1 = total > 0.0 ? w1 / total : parent_pi1;
    node.pi2 = 1.0 - node.pi1;
    if (remaining == 0) {
      node.declared = node.pi1 >= node.pi2 ? 1 : 2;
      pe += std::min(w1, w2);
      tree_.nodes[index] = node;
      return index;
    }
    const Projector m =
        greedy_angle(PriorPair(node.pi1, node.pi2), rho1_, rho2_,
                     options_.angle_step);
    node.theta = m.theta();
    node.p_succ_h1 = measure_prob(rho1_, m);
    node.p_succ_h2 = measure_prob(rho2_, m);
    node.success_child = build(w1 * node.p_succ_h1, w2 * node.p_succ_h2,
                               node.pi1, remaining - 1, pe);
    node.failure_child =
        build(w1 * (1.0 - node.p_succ_h1), w2 * (1.0 - node.p_succ_h2),
              node.pi1, remaining - 1, pe);
    tree_.nodes[index] = node;
    return index;
  }

  OutcomeTree take() { return std::move(tree_); }

 private:
  BlochVector rho1_;
  BlochVector rho2_;
  AdaptiveOptions options_;
  OutcomeTree tree_;
};

}  // namespace

BeliefState bayes_update(const BeliefState& belief, const BlochVector& rho1,
                         const BlochVector& rho2, const Projector& m,
                         bool success) {
  const double q1 = measure_prob(rho1, m);
  const double q2 = measure_prob(rho2, m);
  const double like1 = success ? q1 : 1.0 - q1;
  const double like2 = success ? q2 : 1.0 - q2;
  const double evidence =
      belief.priors.pi1 * like1 + belief.priors.pi2 * like2;
  if (evidence <= 0.0) {
    throw std::domain_error(
        "observed outcome has probability zero under both hypotheses");
  }
  BeliefState updated = belief;
  const double pi1 = belief.priors.pi1 * like1 / evidence;
  updated.priors = PriorPair(pi1, 1.0 - pi1);
  updated.history.push_back({m.theta(), success});
  return updated;
}

Projector next_angle(const BeliefState& belief, const BlochVector& rho1,
                     const BlochVector& rho2) {
  return greedy_angle(belief.priors, rho1, rho2, 0.0);
}

AdaptiveExact adaptive_pe_exact(const BlochVector& rho1,
                                const BlochVector& rho2,
                                const PriorPair& priors, int n,
                                const AdaptiveOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > options.exact_depth_cap) {
    throw std::invalid_argument(
        "exact enumeration builds 2^N branches and is capped at N = " +
        std::to_string(options.exact_depth_cap) +
        "; use adaptive_simulate for larger N");
  }
  TreeBuilder builder(rho1, rho2, options);
  double pe = 0.0;
  builder.build(priors.pi1, priors.pi2, priors.pi1, n, pe);
  AdaptiveExact result{pe, builder.take()};
  result.tree.depth = n;
  return result;
}

AdaptiveRun adaptive_continue(const BeliefState& belief, int truth,
                              const BlochVector& rho1, const BlochVector& rho2,
                              int n_more, std::mt19937_64& rng,
                              const AdaptiveOptions& options) {
  if (truth != 1 && truth != 2) {
    throw std::invalid_argument("truth must be hypothesis 1 or 2");
  }
  if (n_more < 0) throw std::invalid_argument("n_more must be >= 0");
  const BlochVector& true_state = truth == 1 ? rho1 : rho2;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  BeliefState current = belief;
  for (int i = 0; i < n_more; ++i) {
    const Projector m =
        greedy_angle(current.priors, rho1, rho2, options.angle_step);
    const bool success = uniform(rng) < measure_prob(true_state, m);
    current = bayes_update(current, rho1, rho2, m, success);
  }
  const int decision = current.priors.pi1 >= current.priors.pi2 ? 1 : 2;
  return {decision, std::move(current)};
}

AdaptiveRun adaptive_simulate(int truth, const BlochVector& rho1,
                              const BlochVector& rho2, const PriorPair& priors,
                              int n, std::uint64_t seed,
                              const AdaptiveOptions& options) {
  std::mt19937_64 rng(seed);
  return adaptive_continue(BeliefState{priors, {}}, truth, rho1, rho2, n, rng,
                           options);
}

std::vector<StrategyRow> strategy_compare(const BlochVector& rho1,
                                          const BlochVector& rho2,
                                          const PriorPair& priors, int n_max,
                                          const AdaptiveOptions& options) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const AngleResult one_qubit =
      optimal_angle_single(DiscriminationProblem{rho1, rho2, priors, 1});
  const Projector repeated(one_qubit.theta);
  std::vector<StrategyRow> rows;
  rows.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const DiscriminationProblem prob{rho1, rho2, priors, n};
    StrategyRow row;
    row.n = n;
    row.pe_single_static = pe_static_multi(prob, repeated).pe;
    row.pe_global_static = optimal_static_multi(prob).pe;
    row.pe_adaptive = adaptive_pe_exact(rho1, rho2, priors, n, options).pe;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qtherm

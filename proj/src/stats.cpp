#include "qtherm/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace qtherm {

namespace {

// Largest n for which C(n, k) stays exactly representable in a double
// (C(50, 25) ~ 1.3e14 < 2^53).
constexpr int kDirectLimit = 50;

double binomial_coefficient(int n, int k) {
  if (k > n - k) k = n - k;
  double c = 1.0;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
  }
  return c;
}

}  // namespace

double binomial_pmf(int n, int k, double p) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("binomial_pmf requires 0 <= k <= n");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("binomial_pmf requires p in [0, 1]");
  }
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == n ? 1.0 : 0.0;
  if (n <= kDirectLimit) {
    return binomial_coefficient(n, k) * std::pow(p, k) *
           std::pow(1.0 - p, n - k);
  }
  const double log_pmf = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                         std::lgamma(n - k + 1.0) + k * std::log(p) +
                         (n - k) * std::log1p(-p);
  return std::exp(log_pmf);
}

std::vector<double> binomial_pmf_table(int n, double p) {
  std::vector<double> pmf(n + 1);
  for (int k = 0; k <= n; ++k) pmf[k] = binomial_pmf(n, k, p);
  return pmf;
}

std::int64_t binomial_sample(std::int64_t n, double p, std::mt19937_64& rng) {
  if (n < 0) throw std::invalid_argument("binomial_sample requires n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("binomial_sample requires p in [0, 1]");
  }
  if (p == 0.0) return 0;
  if (p == 1.0) return n;
  std::binomial_distribution<std::int64_t> dist(n, p);
  return dist(rng);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace qtherm

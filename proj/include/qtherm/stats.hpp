#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qtherm {

/// C(n, k) * p^k * (1-p)^(n-k). Small n uses exact coefficient products so
/// dyadic probabilities come out bit-exact; large n goes through log-gamma to
/// stay finite (naive factorials overflow long before n = 100).
double binomial_pmf(int n, int k, double p);

/// pmf for k = 0..n as one table.
std::vector<double> binomial_pmf_table(int n, double p);

/// Deterministic binomial draw from the given engine. p outside (0, 1) is
/// handled exactly.
std::int64_t binomial_sample(std::int64_t n, double p, std::mt19937_64& rng);

/// splitmix64 mix of a base seed with a stream index; used to hand every
/// Monte Carlo trial / replicate an independent generator.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace qtherm

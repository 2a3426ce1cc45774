#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pgrn/coupling.hpp"

namespace pgrn {

/// Hard cap for exact enumeration: 2^20 states is about the most a desk run
/// should spend on a reference answer.
inline constexpr int kMaxEnumerationBits = 20;

/// 0.5 * s^T J s + h^T s over the stored entries, summed pairwise in extended
/// precision. This is the slow reference path: it visits every (i, j) pair and
/// never uses the closed form the sampler relies on, so the two can check each
/// other.
long double interaction_sum(const CouplingSet& c, std::span<const std::int8_t> s);

/// Network energy -(0.5 * s^T J s + h^T s). The stored couplings already
/// carry the inverse temperature.
double energy(const CouplingSet& c, std::span<const std::int8_t> s);

struct ExactDistribution {
  int n_bits = 0;
  std::vector<double> pmf;       // indexed by G
  std::vector<double> energies;  // indexed by G
  double z = 0.0;                // sum over states of exp(-E)
  double z_prime = 0.0;          // z with the constant energy offset removed
};

/// Exact Boltzmann distribution by full state enumeration. States are indexed
/// by their readout G; bit i of G holds (s_i + 1) / 2.
ExactDistribution enumerate_boltzmann(const CouplingSet& c);

/// The ideal discretized Gaussian: exp(-X_G^2 / 2) over G in [0, 2^n - 1],
/// normalized, with X_G = (G / G0 - mu) / sigma.
std::vector<double> target_pmf(int n_bits, double mu, double sigma);

struct DistanceReport {
  double total_variation = 0.0;
  double kl_divergence = 0.0;  // KL(p || q), infinite if q vanishes where p doesn't
  double max_abs_diff = 0.0;
  double max_rel_diff = 0.0;  // relative to q, over points where q > 0
};

DistanceReport compare_distributions(const std::vector<double>& p,
                                     const std::vector<double>& q);

}  // namespace pgrn

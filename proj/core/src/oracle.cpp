#include "pgrn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pgrn {

namespace {

/// Kahan-compensated accumulator. The enumeration identities are checked to
/// spreads far below double epsilon, so plain summation is not enough.
struct KahanLd {
  long double sum = 0.0L;
  long double comp = 0.0L;
  void add(long double v) {
    const long double y = v - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

void state_from_g(std::uint64_t g, int n, std::vector<std::int8_t>& s) {
  s.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    s[static_cast<std::size_t>(i)] = (g >> i) & 1ULL ? 1 : -1;
}

}  // namespace

long double interaction_sum(const CouplingSet& c, std::span<const std::int8_t> s) {
  KahanLd acc;
  const int n = c.n_bits;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!c.j_kept(i, j)) continue;
      const long double jij =
          static_cast<long double>(c.jA[i]) * static_cast<long double>(c.jB[j]);
      acc.add(jij * s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)]);
    }
    if (c.h_kept(i))
      acc.add(static_cast<long double>(c.h[i]) * s[static_cast<std::size_t>(i)]);
  }
  return acc.sum;
}

double energy(const CouplingSet& c, std::span<const std::int8_t> s) {
  return static_cast<double>(-interaction_sum(c, s));
}

ExactDistribution enumerate_boltzmann(const CouplingSet& c) {
  if (c.n_bits > kMaxEnumerationBits)
    throw CapacityError("exact enumeration supported up to " +
                        std::to_string(kMaxEnumerationBits) + " bits, got " +
                        std::to_string(c.n_bits));
  const std::uint64_t n_states = 1ULL << c.n_bits;

  ExactDistribution d;
  d.n_bits = c.n_bits;
  d.energies.resize(n_states);
  d.pmf.resize(n_states);

  std::vector<std::int8_t> s;
  double e_min = std::numeric_limits<double>::infinity();
  for (std::uint64_t g = 0; g < n_states; ++g) {
    state_from_g(g, c.n_bits, s);
    d.energies[g] = energy(c, s);
    e_min = std::min(e_min, d.energies[g]);
  }

  KahanLd z_shift;
  for (std::uint64_t g = 0; g < n_states; ++g)
    z_shift.add(std::exp(-(d.energies[g] - e_min)));
  for (std::uint64_t g = 0; g < n_states; ++g)
    d.pmf[g] = static_cast<double>(std::exp(-(d.energies[g] - e_min)) / z_shift.sum);

  d.z = static_cast<double>(z_shift.sum * std::exp(static_cast<long double>(-e_min)));
  const long double offset =
      static_cast<long double>(c.beta) *
      (static_cast<long double>(c.b_const) * c.b_const + c.c_const) / 2.0L;
  d.z_prime = static_cast<double>(
      z_shift.sum * std::exp(static_cast<long double>(-e_min) - offset));
  return d;
}

std::vector<double> target_pmf(int n_bits, double mu, double sigma) {
  if (n_bits < 1 || n_bits > kMaxEnumerationBits)
    throw CapacityError("target pmf supported up to " +
                        std::to_string(kMaxEnumerationBits) + " bits, got " +
                        std::to_string(n_bits));
  if (!(sigma > 0.0)) throw ConfigError("sigma must be > 0");
  const std::uint64_t n_states = 1ULL << n_bits;
  const double g0d = std::ldexp(1.0, n_bits) - 1.0;

  std::vector<double> q(n_states);
  KahanLd z;
  for (std::uint64_t g = 0; g < n_states; ++g) {
    const double x = (static_cast<double>(g) / g0d - mu) / sigma;
    q[g] = std::exp(-0.5 * x * x);
    z.add(q[g]);
  }
  for (auto& v : q) v = static_cast<double>(v / z.sum);
  return q;
}

DistanceReport compare_distributions(const std::vector<double>& p,
                                     const std::vector<double>& q) {
  if (p.size() != q.size())
    throw ShapeError("distributions differ in support size: " +
                     std::to_string(p.size()) + " vs " + std::to_string(q.size()));
  DistanceReport r;
  KahanLd tv;
  KahanLd kl;
  for (std::size_t g = 0; g < p.size(); ++g) {
    const double diff = std::abs(p[g] - q[g]);
    tv.add(diff);
    r.max_abs_diff = std::max(r.max_abs_diff, diff);
    if (p[g] > 0.0) {
      if (q[g] > 0.0)
        kl.add(static_cast<long double>(p[g]) * std::log(p[g] / q[g]));
      else
        kl.add(std::numeric_limits<long double>::infinity());
    }
    if (q[g] > 0.0) r.max_rel_diff = std::max(r.max_rel_diff, diff / q[g]);
  }
  r.total_variation = static_cast<double>(0.5L * tv.sum);
  r.kl_divergence = static_cast<double>(kl.sum);
  return r;
}

}  // namespace pgrn

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "pgrn/coupling.hpp"
#include "pgrn/rng.hpp"
#include "pgrn/spec.hpp"

namespace pgrn {

/// Live network configuration. `g` mirrors `s` at all times: bit i of g is
/// (s[i] + 1) / 2.
struct NetworkState {
  std::vector<std::int8_t> s;
  std::uint64_t g = 0;
  double t_sim_ps = 0.0;
  Xoshiro256pp rng{1};
  std::uint64_t seed = 0;

  int n_bits() const { return static_cast<int>(s.size()); }

  /// Recomputes G from s; equals `g` unless state was corrupted.
  std::uint64_t readout_from_spins() const {
    std::uint64_t g2 = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] > 0) g2 |= 1ULL << i;
    return g2;
  }
};

NetworkState init_state(int n_bits, std::uint64_t seed);

/// O(1) local-field evaluator exploiting the rank-1 coupling structure. The
/// kept neighbor sum over bits j >= k collapses to one masked readout:
///   S = 2 * double(G & high_mask) - (2^N - 2^k),
/// so I_i = jB[i] * (S - [self in band] * 2^i * s_i) + h_i. At full precision
/// k = 0 and S is just 2G - G0.
class FieldEvaluator {
 public:
  explicit FieldEvaluator(const CouplingSet& c) : n_(c.n_bits) {
    pair_coef_.resize(n_);
    bias_.resize(n_);
    weight_.resize(n_);
    sum_offset_.resize(n_);
    high_mask_.resize(n_);
    self_in_band_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      pair_coef_[i] = c.jB[i];
      bias_[i] = c.h_kept(i) ? c.h[i] : 0.0;
      weight_[i] = c.jA[i];
      const int k = std::max(0, c.j_keep_threshold - i);
      if (k >= n_) {
        high_mask_[i] = 0;
        sum_offset_[i] = 0.0;
        self_in_band_[i] = 0;
      } else {
        high_mask_[i] = (~0ULL << k) & (n_ >= 64 ? ~0ULL : ((1ULL << n_) - 1));
        sum_offset_[i] = std::ldexp(1.0, n_) - std::ldexp(1.0, k);
        self_in_band_[i] = i >= k ? 1 : 0;
      }
    }
  }

  int n_bits() const { return n_; }

  double field(std::uint64_t g, std::int8_t s_i, int i) const {
    double sum = 2.0 * static_cast<double>(g & high_mask_[i]) - sum_offset_[i];
    if (self_in_band_[i]) sum -= weight_[i] * s_i;
    return pair_coef_[i] * sum + bias_[i];
  }

 private:
  int n_;
  std::vector<double> pair_coef_;
  std::vector<double> bias_;
  std::vector<double> weight_;
  std::vector<double> sum_offset_;
  std::vector<std::uint64_t> high_mask_;
  std::vector<std::uint8_t> self_in_band_;
};

inline double local_field(const FieldEvaluator& f, const NetworkState& st, int i) {
  return f.field(st.g, st.s[static_cast<std::size_t>(i)], i);
}

/// Reference evaluation by explicit dot product over the kept entries.
double local_field_dense(const CouplingSet& c, std::span<const std::int8_t> s, int i);

/// Resamples spin i from its conditional. Consumes exactly one uniform
/// variate whatever the outcome.
inline void gibbs_update(NetworkState& st, const FieldEvaluator& f, int i) {
  const double in = local_field(f, st, i);
  // in == 0 short-circuits to the same 0.5 that tanh would give; truncated
  // networks spend most updates on field-free bits.
  const double p_plus = in == 0.0 ? 0.5 : 0.5 * (1.0 + std::tanh(std::clamp(in, -30.0, 30.0)));
  const std::int8_t next = st.rng.uniform01() < p_plus ? std::int8_t{1} : std::int8_t{-1};
  st.s[static_cast<std::size_t>(i)] = next;
  const std::uint64_t bit = 1ULL << i;
  st.g = next > 0 ? (st.g | bit) : (st.g & ~bit);
}

enum class SweepOrder {
  fixed,        // indices 0..N-1
  random_scan,  // fresh uniform permutation each sweep
};

/// One update per index, in the requested order.
void gibbs_sweep(NetworkState& st, const FieldEvaluator& f, SweepOrder order);

/// Continuous-time dynamics: each p-bit fires on an independent exponential
/// clock of the given rate; a firing p-bit is resampled from its conditional.
/// Advances t_sim_ps by duration_ps. duration_ps = 0 is an exact no-op.
void autonomous_run(NetworkState& st, const FieldEvaluator& f, double duration_ps,
                    double rate_per_ps);

enum class InitMode : std::uint8_t {
  random_bits,   // every bit a fair coin; starts near the readout midpoint
  target_level,  // readout drawn from the target Gaussian, bits set to match
};

const char* init_mode_name(InitMode m);

struct GenerateOptions {
  std::int64_t burn_in_sweeps = 100;      // Gibbs modes
  double burn_in_tau_multiple = 50.0;     // ct mode: burn-in = multiple * tau
  int chains = 1;                         // independent restarts, samples pooled
  InitMode init = InitMode::random_bits;
};

struct SampleStream {
  GrngSpec spec;
  std::uint64_t seed = 0;
  GenerateOptions options;
  std::vector<std::uint64_t> values;
};

/// Full pipeline: build couplings, burn in, emit `count` readouts spaced by
/// spec.spacing_sweeps sweeps (Gibbs modes) or spec.spacing_ps simulated time
/// (ct mode). Streams are pure functions of (spec, count, seed, options).
SampleStream generate(const GrngSpec& spec, std::uint64_t count, std::uint64_t seed,
                      const GenerateOptions& opts = {});

/// Isolated p-bit telegraph trace: each step attempts a resample with
/// probability dt/tau; an attempt sets the output to +1 with probability
/// (1 + tanh(bias))/2. Requires dt <= tau/10.
std::vector<std::int8_t> free_pbit_trace(double bias, double tau_ps,
                                         std::uint64_t steps, double dt_ps,
                                         std::uint64_t seed);

}  // namespace pgrn

#pragma once

#include <cstdint>
#include <string>

#include "pgrn/errors.hpp"

namespace pgrn {

enum class Mode : std::uint8_t {
  sequential_gibbs = 0,
  random_scan_gibbs = 1,
  ct_autonomous = 2,
};

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::sequential_gibbs: return "sequential_gibbs";
    case Mode::random_scan_gibbs: return "random_scan_gibbs";
    case Mode::ct_autonomous: return "ct_autonomous";
  }
  return "?";
}

Mode parse_mode(const std::string& name);

/// Full-scale output G of n bits spans [0, 2^n - 1].
constexpr std::uint64_t g0_for(int n_bits) {
  return n_bits >= 64 ? ~0ULL : ((1ULL << n_bits) - 1ULL);
}

/// Everything needed to reproduce a run. `precision == 0` means
/// "untruncated", which resolves to 2*n_bits.
struct GrngSpec {
  int n_bits = 64;
  double mu = 0.5;            // target mean, in units of G0
  double sigma = 0.1;         // target std dev, in units of G0
  int precision = 0;          // kept weight-bit budget p; 0 = untruncated
  double beta = 1.0;          // inverse temperature (E0 in physical units)
  Mode mode = Mode::random_scan_gibbs;
  double tau_corr_ps = 380.0;   // per-p-bit correlation time, ct mode
  int spacing_sweeps = 8;       // sweeps between retained samples, Gibbs modes
  double spacing_ps = 2000.0;   // sim time between retained samples, ct mode

  int resolved_precision() const { return precision == 0 ? 2 * n_bits : precision; }
  std::uint64_t g0() const { return g0_for(n_bits); }

  void validate() const {
    if (n_bits < 1 || n_bits > 64)
      throw ConfigError("n_bits must be in [1, 64], got " + std::to_string(n_bits));
    if (!(mu >= 0.0) || !(mu <= 1.0))
      throw ConfigError("mu must be in [0, 1], got " + std::to_string(mu));
    if (!(sigma > 0.0))
      throw ConfigError("sigma must be > 0, got " + std::to_string(sigma));
    if (precision < 0 || precision > 2 * n_bits)
      throw ConfigError("precision must be in [0, 2*n_bits], got " +
                        std::to_string(precision));
    if (!(beta > 0.0))
      throw ConfigError("beta must be > 0, got " + std::to_string(beta));
    if (!(tau_corr_ps > 0.0))
      throw ConfigError("tau_corr_ps must be > 0, got " + std::to_string(tau_corr_ps));
    if (spacing_sweeps < 1)
      throw ConfigError("spacing_sweeps must be >= 1, got " +
                        std::to_string(spacing_sweeps));
    if (!(spacing_ps > 0.0))
      throw ConfigError("spacing_ps must be > 0, got " + std::to_string(spacing_ps));
  }
};

}  // namespace pgrn

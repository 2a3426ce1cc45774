#include "pgrn/sampler.hpp"

#include <numeric>

namespace pgrn {

NetworkState init_state(int n_bits, std::uint64_t seed) {
  if (n_bits < 1 || n_bits > 64)
    throw ConfigError("n_bits must be in [1, 64], got " + std::to_string(n_bits));
  NetworkState st;
  st.seed = seed;
  st.rng = Xoshiro256pp(seed);
  st.g = st.rng.next_u64() & g0_for(n_bits);
  st.s.resize(static_cast<std::size_t>(n_bits));
  for (int i = 0; i < n_bits; ++i)
    st.s[static_cast<std::size_t>(i)] = (st.g >> i) & 1ULL ? 1 : -1;
  return st;
}

double local_field_dense(const CouplingSet& c, std::span<const std::int8_t> s, int i) {
  long double acc = 0.0L;
  for (int j = 0; j < c.n_bits; ++j)
    if (c.j_kept(i, j))
      acc += static_cast<long double>(c.jA[i]) * c.jB[j] * s[static_cast<std::size_t>(j)];
  if (c.h_kept(i)) acc += static_cast<long double>(c.h[i]);
  return static_cast<double>(acc);
}

namespace {

void sweep_impl(NetworkState& st, const FieldEvaluator& f, SweepOrder order,
                std::vector<int>& perm) {
  const int n = f.n_bits();
  if (order == SweepOrder::fixed) {
    for (int i = 0; i < n; ++i) gibbs_update(st, f, i);
    return;
  }
  if (perm.size() != static_cast<std::size_t>(n)) {
    perm.resize(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
  }
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(st.rng.bounded(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  for (const int i : perm) gibbs_update(st, f, i);
}

}  // namespace

void gibbs_sweep(NetworkState& st, const FieldEvaluator& f, SweepOrder order) {
  std::vector<int> perm;
  sweep_impl(st, f, order, perm);
}

void autonomous_run(NetworkState& st, const FieldEvaluator& f, double duration_ps,
                    double rate_per_ps) {
  if (!(duration_ps >= 0.0))
    throw ConfigError("duration must be >= 0, got " + std::to_string(duration_ps));
  if (!(rate_per_ps > 0.0))
    throw ConfigError("clock rate must be > 0, got " + std::to_string(rate_per_ps));
  if (duration_ps == 0.0) return;

  const int n = f.n_bits();
  const double total_rate = n * rate_per_ps;
  double t = st.rng.exponential(total_rate);
  while (t <= duration_ps) {
    const auto victim = static_cast<int>(st.rng.bounded(static_cast<std::uint64_t>(n)));
    gibbs_update(st, f, victim);
    t += st.rng.exponential(total_rate);
  }
  st.t_sim_ps += duration_ps;
}

const char* init_mode_name(InitMode m) {
  return m == InitMode::target_level ? "target_level" : "random_bits";
}

namespace {

/// Plants the readout at a level drawn from the target law, so restart
/// ensembles cover metastable regions with the correct mass even when the
/// chain cannot cross between them.
NetworkState init_state_at_level(const GrngSpec& spec, std::uint64_t seed) {
  NetworkState st = init_state(spec.n_bits, seed);
  const double z = st.rng.normal01();
  long double u = spec.mu + static_cast<long double>(spec.sigma) * z;
  if (u < 0.0L) u = 0.0L;
  if (u > 1.0L) u = 1.0L;
  const long double g0d = std::ldexp(1.0L, spec.n_bits) - 1.0L;
  auto g = static_cast<std::uint64_t>(u * g0d + 0.5L);
  const std::uint64_t g0 = spec.g0();
  if (g > g0) g = g0;
  st.g = g;
  for (int i = 0; i < spec.n_bits; ++i)
    st.s[static_cast<std::size_t>(i)] = (g >> i) & 1ULL ? 1 : -1;
  return st;
}

void generate_chain(const GrngSpec& spec, std::uint64_t count, std::uint64_t seed,
                    const GenerateOptions& opts, const FieldEvaluator& f,
                    std::vector<std::uint64_t>& values) {
  NetworkState st = opts.init == InitMode::target_level
                        ? init_state_at_level(spec, seed)
                        : init_state(spec.n_bits, seed);
  if (spec.mode == Mode::ct_autonomous) {
    const double rate = 1.0 / spec.tau_corr_ps;
    autonomous_run(st, f, opts.burn_in_tau_multiple * spec.tau_corr_ps, rate);
    for (std::uint64_t m = 0; m < count; ++m) {
      autonomous_run(st, f, spec.spacing_ps, rate);
      values.push_back(st.g);
    }
  } else {
    const SweepOrder order = spec.mode == Mode::sequential_gibbs
                                 ? SweepOrder::fixed
                                 : SweepOrder::random_scan;
    std::vector<int> perm;
    for (std::int64_t k = 0; k < opts.burn_in_sweeps; ++k)
      sweep_impl(st, f, order, perm);
    for (std::uint64_t m = 0; m < count; ++m) {
      for (int r = 0; r < spec.spacing_sweeps; ++r) sweep_impl(st, f, order, perm);
      values.push_back(st.g);
    }
  }
}

}  // namespace

SampleStream generate(const GrngSpec& spec, std::uint64_t count, std::uint64_t seed,
                      const GenerateOptions& opts) {
  spec.validate();
  if (count < 1) throw ConfigError("sample count must be >= 1");
  if (opts.burn_in_sweeps < 0 || !(opts.burn_in_tau_multiple >= 0.0))
    throw ConfigError("burn-in must be >= 0");
  if (opts.chains < 1) throw ConfigError("chains must be >= 1");
  if (static_cast<std::uint64_t>(opts.chains) > count)
    throw ConfigError("chains must not exceed the sample count");

  const CouplingSet c = build_couplings(spec);
  const FieldEvaluator f(c);

  SampleStream out;
  out.spec = spec;
  out.seed = seed;
  out.options = opts;
  out.values.reserve(count);

  if (opts.chains == 1) {
    generate_chain(spec, count, seed, opts, f, out.values);
    return out;
  }
  // Independent restarts pool samples across metastable basins that a single
  // chain cannot cross in reasonable time (deep traps appear once the MSB
  // flip distance reaches several target sigma). Chain k draws its own seed,
  // burns in, and contributes an equal share (the first `count % chains`
  // chains take one extra).
  const auto chains = static_cast<std::uint64_t>(opts.chains);
  const std::uint64_t share = count / chains;
  const std::uint64_t extra = count % chains;
  for (std::uint64_t k = 0; k < chains; ++k) {
    const std::uint64_t n_k = share + (k < extra ? 1 : 0);
    if (n_k == 0) continue;
    generate_chain(spec, n_k, derive_seed(seed, k), opts, f, out.values);
  }
  return out;
}

std::vector<std::int8_t> free_pbit_trace(double bias, double tau_ps,
                                         std::uint64_t steps, double dt_ps,
                                         std::uint64_t seed) {
  if (!(tau_ps > 0.0)) throw ConfigError("tau must be > 0");
  if (!(dt_ps > 0.0)) throw ConfigError("dt must be > 0");
  if (dt_ps > tau_ps / 10.0)
    throw ConfigError("dt must be <= tau/10 for the flip-attempt approximation (dt=" +
                      std::to_string(dt_ps) + ", tau=" + std::to_string(tau_ps) + ")");
  if (steps < 1) throw ConfigError("steps must be >= 1");

  Xoshiro256pp rng(seed);
  const double p_attempt = dt_ps / tau_ps;
  const double p_plus = 0.5 * (1.0 + std::tanh(std::clamp(bias, -30.0, 30.0)));

  std::vector<std::int8_t> trace;
  trace.reserve(steps);
  std::int8_t out = rng.uniform01() < p_plus ? std::int8_t{1} : std::int8_t{-1};
  for (std::uint64_t t = 0; t < steps; ++t) {
    if (rng.uniform01() < p_attempt)
      out = rng.uniform01() < p_plus ? std::int8_t{1} : std::int8_t{-1};
    trace.push_back(out);
  }
  return trace;
}

}  // namespace pgrn

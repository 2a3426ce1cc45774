#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "pgrn/coupling.hpp"
#include "pgrn/errors.hpp"
#include "pgrn/rng.hpp"
#include "pgrn/sampler.hpp"

using namespace pgrn;

namespace {

NetworkState state_from_bits(std::uint64_t g, int n, std::uint64_t seed = 1) {
  NetworkState st = init_state(n, seed);
  st.g = g;
  for (int i = 0; i < n; ++i)
    st.s[static_cast<std::size_t>(i)] = (g >> i) & 1 ? std::int8_t{1} : std::int8_t{-1};
  return st;
}

}  // namespace

TEST_SUITE("sampler") {

TEST_CASE("initial state mirrors bits and replays by seed") {
  const NetworkState a = init_state(12, 77);
  const NetworkState b = init_state(12, 77);
  const NetworkState c = init_state(12, 78);
  CHECK(a.s == b.s);
  CHECK(a.g == b.g);
  CHECK(a.seed == 77);
  CHECK(a.g == a.readout_from_spins());
  CHECK(a.t_sim_ps == 0.0);
  bool differs = a.g != c.g;
  for (int i = 0; i < 12 && !differs; ++i) differs = a.s[i] != c.s[i];
  CHECK(differs);

  NetworkState corrupted = a;
  corrupted.s[0] = static_cast<std::int8_t>(-corrupted.s[0]);
  CHECK(corrupted.readout_from_spins() != corrupted.g);
}

TEST_CASE("closed-form local field equals the dense dot product") {
  Xoshiro256pp r(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(r.bounded(16));
    GrngSpec spec;
    spec.n_bits = n;
    spec.mu = 0.2 + 0.6 * r.uniform01();
    spec.sigma = 0.05 + 0.3 * r.uniform01();
    spec.precision = 1 + static_cast<int>(r.bounded(static_cast<std::uint64_t>(2 * n)));
    const CouplingSet c = build_couplings(spec);
    const FieldEvaluator f(c);
    const std::uint64_t g = r.next_u64() & c.g0;
    const NetworkState st = state_from_bits(g, n);
    for (int i = 0; i < n; ++i) {
      const double fast = local_field(f, st, i);
      const double dense = local_field_dense(c, st.s, i);
      CHECK(std::fabs(fast - dense) <= 1e-12 * std::max(1.0, std::fabs(dense)));
    }
  }
}

TEST_CASE("local field of the hand-built two-bit network") {
  // N=2, mu=0, sigma=1 at s=(+1,-1): I_0 = J01*s1 + h0 = 1/18 - 1/12 = -1/36.
  GrngSpec spec;
  spec.n_bits = 2;
  spec.mu = 0.0;
  spec.sigma = 1.0;
  const CouplingSet c = build_couplings(spec);
  const FieldEvaluator f(c);
  const NetworkState st = state_from_bits(0b01, 2);
  CHECK(local_field(f, st, 0) == doctest::Approx(-1.0 / 36.0).epsilon(1e-14));
  CHECK(local_field_dense(c, st.s, 0) == doctest::Approx(-1.0 / 36.0).epsilon(1e-14));
}

TEST_CASE("each spin update consumes exactly one variate") {
  GrngSpec spec;
  spec.n_bits = 8;
  const CouplingSet c = build_couplings(spec);
  const FieldEvaluator f(c);
  NetworkState st = init_state(8, 5);
  Xoshiro256pp probe = st.rng;
  gibbs_update(st, f, 3);
  probe.next_u64();
  CHECK(st.rng.s == probe.s);
}

TEST_CASE("updates and sweeps keep the readout mirrored") {
  GrngSpec spec;
  spec.n_bits = 10;
  spec.sigma = 0.15;
  const CouplingSet c = build_couplings(spec);
  const FieldEvaluator f(c);
  NetworkState st = init_state(10, 3);
  for (int k = 0; k < 500; ++k) {
    gibbs_update(st, f, static_cast<int>(st.rng.bounded(10)));
    REQUIRE(st.g == st.readout_from_spins());
  }
  for (int k = 0; k < 20; ++k) {
    gibbs_sweep(st, f, SweepOrder::random_scan);
    REQUIRE(st.g == st.readout_from_spins());
    gibbs_sweep(st, f, SweepOrder::fixed);
    REQUIRE(st.g == st.readout_from_spins());
  }

  NetworkState st2 = init_state(10, 3);
  for (int k = 0; k < 500; ++k)
    gibbs_update(st2, f, static_cast<int>(st2.rng.bounded(10)));
  for (int k = 0; k < 20; ++k) {
    gibbs_sweep(st2, f, SweepOrder::random_scan);
    gibbs_sweep(st2, f, SweepOrder::fixed);
  }
  CHECK(st.g == st2.g);  // identical seed, identical trajectory
}

TEST_CASE("generated streams are pure functions of their inputs") {
  GrngSpec spec;
  spec.n_bits = 8;
  spec.sigma = 0.2;
  spec.spacing_sweeps = 2;
  GenerateOptions opts;
  opts.burn_in_sweeps = 20;
  const SampleStream a = generate(spec, 300, 11, opts);
  const SampleStream b = generate(spec, 300, 11, opts);
  const SampleStream c = generate(spec, 300, 12, opts);
  REQUIRE(a.values.size() == 300);
  CHECK(a.values == b.values);
  CHECK(a.values != c.values);
  CHECK(a.seed == 11);
  for (const auto g : a.values) CHECK(g <= spec.g0());
}

TEST_CASE("pooled chains are the concatenation of derived single chains") {
  GrngSpec spec;
  spec.n_bits = 8;
  spec.sigma = 0.2;
  spec.spacing_sweeps = 1;
  GenerateOptions pooled_opts;
  pooled_opts.burn_in_sweeps = 10;
  pooled_opts.chains = 2;
  const SampleStream pooled = generate(spec, 5, 42, pooled_opts);
  REQUIRE(pooled.values.size() == 5);

  GenerateOptions single = pooled_opts;
  single.chains = 1;
  const SampleStream first = generate(spec, 3, derive_seed(42, 0), single);
  const SampleStream second = generate(spec, 2, derive_seed(42, 1), single);
  CHECK(std::vector<std::uint64_t>(pooled.values.begin(), pooled.values.begin() + 3) ==
        first.values);
  CHECK(std::vector<std::uint64_t>(pooled.values.begin() + 3, pooled.values.end()) ==
        second.values);
}

TEST_CASE("start-at-level chains replay and differ from coin starts") {
  GrngSpec spec;
  spec.n_bits = 10;
  spec.sigma = 0.05;
  spec.spacing_sweeps = 1;
  GenerateOptions leveled;
  leveled.burn_in_sweeps = 0;
  leveled.init = InitMode::target_level;
  leveled.chains = 4;
  const SampleStream a = generate(spec, 40, 9, leveled);
  const SampleStream b = generate(spec, 40, 9, leveled);
  CHECK(a.values == b.values);

  GenerateOptions coins = leveled;
  coins.init = InitMode::random_bits;
  const SampleStream c = generate(spec, 40, 9, coins);
  CHECK(a.values != c.values);

  CHECK(std::string(init_mode_name(InitMode::random_bits)) == "random_bits");
  CHECK(std::string(init_mode_name(InitMode::target_level)) == "target_level");
}

TEST_CASE("generation rejects impossible requests") {
  GrngSpec spec;
  spec.n_bits = 6;
  GenerateOptions opts;
  CHECK_THROWS_AS(generate(spec, 0, 1, opts), ConfigError);
  opts.burn_in_sweeps = -1;
  CHECK_THROWS_AS(generate(spec, 10, 1, opts), ConfigError);
  opts = GenerateOptions{};
  opts.chains = 0;
  CHECK_THROWS_AS(generate(spec, 10, 1, opts), ConfigError);
  opts.chains = 11;
  CHECK_THROWS_AS(generate(spec, 10, 1, opts), ConfigError);
}

TEST_CASE("single free bit is a fair coin") {
  GrngSpec spec;
  spec.n_bits = 1;
  spec.mu = 0.5;
  spec.sigma = 0.5;
  spec.spacing_sweeps = 1;
  GenerateOptions opts;
  opts.burn_in_sweeps = 5;
  const SampleStream s = generate(spec, 20000, 6, opts);
  double mean = 0.0;
  for (const auto g : s.values) {
    REQUIRE(g <= 1);
    mean += static_cast<double>(g);
  }
  mean /= static_cast<double>(s.values.size());
  CHECK(mean == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("zero-duration autonomous run changes nothing") {
  GrngSpec spec;
  spec.n_bits = 8;
  const CouplingSet c = build_couplings(spec);
  const FieldEvaluator f(c);
  NetworkState st = init_state(8, 21);
  const NetworkState before = st;
  autonomous_run(st, f, 0.0, 1.0 / 380.0);
  CHECK(st.g == before.g);
  CHECK(st.s == before.s);
  CHECK(st.rng.s == before.rng.s);
  CHECK(st.t_sim_ps == before.t_sim_ps);

  CHECK_THROWS_AS(autonomous_run(st, f, -1.0, 1.0 / 380.0), ConfigError);
  CHECK_THROWS_AS(autonomous_run(st, f, 1.0, 0.0), ConfigError);
}

TEST_CASE("autonomous dynamics generate valid replayable streams") {
  GrngSpec spec;
  spec.n_bits = 4;
  spec.sigma = 0.25;
  spec.mode = Mode::ct_autonomous;
  spec.spacing_ps = 500.0;
  GenerateOptions opts;
  opts.burn_in_tau_multiple = 5.0;
  const SampleStream a = generate(spec, 200, 13, opts);
  const SampleStream b = generate(spec, 200, 13, opts);
  REQUIRE(a.values.size() == 200);
  CHECK(a.values == b.values);
  for (const auto g : a.values) CHECK(g <= spec.g0());
}

TEST_CASE("telegraph trace obeys the attempt approximation limits") {
  CHECK_THROWS_AS(free_pbit_trace(0.0, 380.0, 100, 39.0, 1), ConfigError);
  CHECK_THROWS_AS(free_pbit_trace(0.0, 0.0, 100, 1.0, 1), ConfigError);
  CHECK_THROWS_AS(free_pbit_trace(0.0, 380.0, 0, 1.0, 1), ConfigError);

  const auto tr = free_pbit_trace(1.0, 380.0, 200000, 1.0, 31);
  const auto tr2 = free_pbit_trace(1.0, 380.0, 200000, 1.0, 31);
  CHECK(tr == tr2);
  double mean = 0.0;
  for (const auto v : tr) {
    REQUIRE((v == 1 || v == -1));
    mean += v;
  }
  mean /= static_cast<double>(tr.size());
  // tanh(1) = 0.7616; the trace holds ~526 independent stretches at tau=380,
  // so allow a wide statistical band.
  CHECK(mean == doctest::Approx(std::tanh(1.0)).epsilon(0.08));
}

}  // TEST_SUITE

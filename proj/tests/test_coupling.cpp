#include <cmath>
#include <string>

#include "doctest.h"
#include "pgrn/coupling.hpp"
#include "pgrn/errors.hpp"
#include "pgrn/spec.hpp"

using namespace pgrn;

namespace {

GrngSpec spec_n2_unit() {
  GrngSpec s;
  s.n_bits = 2;
  s.mu = 0.0;
  s.sigma = 1.0;
  return s;
}

}  // namespace

TEST_SUITE("coupling") {

TEST_CASE("two-bit network matches hand-derived constants") {
  // N=2, mu=0, sigma=1: G0=3, A=1/6, B=1/2, so
  //   jB = (-1/36, -1/18), h = (-1/12, -1/6), C = A^2*(1+4) = 5/36.
  const CouplingSet c = build_couplings(spec_n2_unit());
  CHECK(c.n_bits == 2);
  CHECK(c.g0 == 3);
  CHECK(c.a_const == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(c.b_const == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(c.c_const == doctest::Approx(5.0 / 36.0).epsilon(1e-15));
  CHECK(c.jA[0] == 1.0);
  CHECK(c.jA[1] == 2.0);
  CHECK(c.jB[0] == doctest::Approx(-1.0 / 36.0).epsilon(1e-15));
  CHECK(c.jB[1] == doctest::Approx(-1.0 / 18.0).epsilon(1e-15));
  CHECK(c.h[0] == doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
  CHECK(c.h[1] == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("pair entries are symmetric and the diagonal vanishes") {
  const CouplingSet c = build_couplings(spec_n2_unit());
  CHECK(c.j_entry(0, 1) == doctest::Approx(-1.0 / 18.0).epsilon(1e-15));
  CHECK(c.j_entry(1, 0) == doctest::Approx(-1.0 / 18.0).epsilon(1e-15));
  CHECK(c.j_entry(0, 0) == 0.0);
  CHECK(c.j_entry(1, 1) == 0.0);
  CHECK(c.h_entry(0) == doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
  CHECK(c.h_entry(1) == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("untruncated build keeps everything") {
  GrngSpec s;
  s.n_bits = 8;
  const CouplingSet c = build_couplings(s);
  CHECK(c.j_keep_threshold == 0);
  CHECK(c.h_keep_threshold == 0);
  for (int i = 0; i < 8; ++i) {
    CHECK(c.h_kept(i));
    for (int j = 0; j < 8; ++j) CHECK(c.j_kept(i, j) == (i != j));
  }
}

TEST_CASE("64-bit budget of 10 drops pairs below weight 118 and biases below 54") {
  GrngSpec s;
  s.n_bits = 64;
  s.precision = 10;
  const CouplingSet c = build_couplings(s);
  CHECK(c.j_keep_threshold == 118);
  CHECK(c.h_keep_threshold == 54);
  CHECK(c.j_kept(63, 55));
  CHECK_FALSE(c.j_kept(63, 54));
  CHECK_FALSE(c.j_kept(59, 59));  // diagonal stays out even above threshold
  CHECK(c.h_kept(54));
  CHECK_FALSE(c.h_kept(53));
  CHECK(c.j_entry(63, 54) == 0.0);
  CHECK(c.j_entry(63, 55) != 0.0);
  CHECK(c.h_entry(53) == 0.0);
}

TEST_CASE("truncation only moves thresholds and is idempotent") {
  GrngSpec s;
  s.n_bits = 16;
  const CouplingSet full = build_couplings(s);
  const CouplingSet t1 = truncate_couplings(full, 6);
  CHECK(t1.j_keep_threshold == 26);
  CHECK(t1.h_keep_threshold == 10);
  CHECK(t1.jB == full.jB);  // vectors are never rewritten
  CHECK(t1.h == full.h);

  const CouplingSet t2 = truncate_couplings(t1, 6);
  CHECK(t2.j_keep_threshold == t1.j_keep_threshold);
  CHECK(t2.h_keep_threshold == t1.h_keep_threshold);

  const CouplingSet back = truncate_couplings(t1, 32);
  CHECK(back.j_keep_threshold == full.j_keep_threshold);
  CHECK(back.h_keep_threshold == full.h_keep_threshold);
}

TEST_CASE("building at a budget equals truncating the full build") {
  GrngSpec full_spec;
  full_spec.n_bits = 12;
  full_spec.mu = 0.4;
  full_spec.sigma = 0.15;
  GrngSpec trunc_spec = full_spec;
  trunc_spec.precision = 7;

  const CouplingSet a = build_couplings(trunc_spec);
  const CouplingSet b = truncate_couplings(build_couplings(full_spec), 7);
  CHECK(a.j_keep_threshold == b.j_keep_threshold);
  CHECK(a.h_keep_threshold == b.h_keep_threshold);
  CHECK(a.jB == b.jB);
  CHECK(a.h == b.h);
}

TEST_CASE("power-of-two beta scales couplings exactly") {
  GrngSpec s1;
  s1.n_bits = 10;
  s1.mu = 0.3;
  s1.sigma = 0.07;
  GrngSpec s4 = s1;
  s4.beta = 4.0;
  const CouplingSet c1 = build_couplings(s1);
  const CouplingSet c4 = build_couplings(s4);
  for (int i = 0; i < 10; ++i) {
    CHECK(c4.jB[i] == 4.0 * c1.jB[i]);
    CHECK(c4.h[i] == 4.0 * c1.h[i]);
  }
}

TEST_CASE("dense expansion agrees with the entry accessor") {
  GrngSpec s;
  s.n_bits = 6;
  s.mu = 0.6;
  s.sigma = 0.12;
  s.precision = 5;
  const CouplingSet c = build_couplings(s);
  const DenseMatrix m = materialize_full_matrix(c);
  REQUIRE(m.n == 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(m.at(i, j) == c.j_entry(i, j));
}

TEST_CASE("dense expansion refuses absurd sizes") {
  CouplingSet c;
  c.n_bits = 5000;
  CHECK_THROWS_AS(materialize_full_matrix(c), CapacityError);
}

TEST_CASE("invalid parameters are rejected up front") {
  GrngSpec s;
  auto expect_reject = [](GrngSpec bad) {
    CHECK_THROWS_AS(build_couplings(bad), ConfigError);
  };
  s.n_bits = 0;
  expect_reject(s);
  s.n_bits = 65;
  expect_reject(s);
  s = GrngSpec{};
  s.mu = -0.1;
  expect_reject(s);
  s.mu = 1.1;
  expect_reject(s);
  s = GrngSpec{};
  s.sigma = 0.0;
  expect_reject(s);
  s = GrngSpec{};
  s.precision = -1;
  expect_reject(s);
  s.precision = 2 * s.n_bits + 1;
  expect_reject(s);
  s = GrngSpec{};
  s.beta = 0.0;
  expect_reject(s);
  s = GrngSpec{};
  s.spacing_sweeps = 0;
  expect_reject(s);
  s = GrngSpec{};
  s.tau_corr_ps = 0.0;
  expect_reject(s);
  s = GrngSpec{};
  s.spacing_ps = 0.0;
  expect_reject(s);

  // The closed endpoints of mu's range are legal.
  s = GrngSpec{};
  s.n_bits = 4;
  s.mu = 0.0;
  CHECK_NOTHROW(build_couplings(s));
  s.mu = 1.0;
  CHECK_NOTHROW(build_couplings(s));

  CHECK_THROWS_AS(truncate_couplings(build_couplings(GrngSpec{}), 0), ConfigError);
}

TEST_CASE("description lists the network parameters") {
  GrngSpec s;
  s.n_bits = 4;
  const std::string d = describe_couplings(build_couplings(s));
  CHECK(d.find("n_bits 4") != std::string::npos);
  CHECK(d.find("j_keep_threshold") != std::string::npos);
  CHECK(d.find("dropped_pairs 0") != std::string::npos);
}

}  // TEST_SUITE

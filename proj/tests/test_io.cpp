#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "pgrn/errors.hpp"
#include "pgrn/sampler.hpp"
#include "pgrn/stream_io.hpp"

using namespace pgrn;

namespace {

SampleStream sample_stream() {
  SampleStream s;
  s.spec.n_bits = 12;
  s.spec.mu = 0.4;
  s.spec.sigma = 0.07;
  s.spec.precision = 9;
  s.spec.beta = 2.0;
  s.spec.mode = Mode::ct_autonomous;
  s.spec.tau_corr_ps = 200.0;
  s.spec.spacing_sweeps = 5;
  s.spec.spacing_ps = 1500.0;
  s.seed = 99;
  s.options.burn_in_sweeps = 77;
  s.options.burn_in_tau_multiple = 12.5;
  s.options.chains = 3;
  s.options.init = InitMode::target_level;
  s.values = {0, 1, 2049, 4095};
  return s;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

struct FileGuard {
  std::string path;
  explicit FileGuard(std::string p) : path(std::move(p)) {}
  ~FileGuard() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("binary encoding round-trips every field") {
  const SampleStream s = sample_stream();
  const SampleStream d = decode_stream(encode_stream(s));
  CHECK(d.spec.n_bits == s.spec.n_bits);
  CHECK(d.spec.mu == s.spec.mu);
  CHECK(d.spec.sigma == s.spec.sigma);
  CHECK(d.spec.precision == s.spec.precision);
  CHECK(d.spec.beta == s.spec.beta);
  CHECK(d.spec.mode == s.spec.mode);
  CHECK(d.spec.tau_corr_ps == s.spec.tau_corr_ps);
  CHECK(d.spec.spacing_sweeps == s.spec.spacing_sweeps);
  CHECK(d.spec.spacing_ps == s.spec.spacing_ps);
  CHECK(d.seed == s.seed);
  CHECK(d.options.burn_in_sweeps == s.options.burn_in_sweeps);
  CHECK(d.options.burn_in_tau_multiple == s.options.burn_in_tau_multiple);
  CHECK(d.options.chains == s.options.chains);
  CHECK(d.options.init == s.options.init);
  CHECK(d.values == s.values);
}

TEST_CASE("header bytes sit at their documented offsets") {
  const SampleStream s = sample_stream();
  const std::vector<std::byte> b = encode_stream(s);
  REQUIRE(b.size() > kStreamHeaderBytes);
  CHECK(static_cast<char>(b[0]) == 'P');
  CHECK(static_cast<char>(b[1]) == 'G');
  CHECK(static_cast<char>(b[2]) == 'R');
  CHECK(static_cast<char>(b[3]) == 'N');
  CHECK(static_cast<std::uint8_t>(b[4]) == 1);  // version, little-endian
  CHECK(static_cast<std::uint8_t>(b[5]) == 0);
  CHECK(static_cast<std::uint8_t>(b[6]) == 12);  // n_bits
  CHECK(static_cast<std::uint8_t>(b[7]) == 0);
  CHECK(static_cast<std::uint8_t>(b[8]) == 2);  // ct mode
  CHECK((static_cast<std::uint8_t>(b[9]) & 0x01) == 0x01);  // trailer flag
  CHECK(static_cast<std::uint8_t>(b[10]) == 0);  // reserved
  CHECK(static_cast<std::uint8_t>(b[11]) == 0);

  auto read_u64 = [&](std::size_t off) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[off + i]) << (8 * i);
    return v;
  };
  CHECK(std::bit_cast<double>(read_u64(12)) == 0.4);   // mu
  CHECK(std::bit_cast<double>(read_u64(20)) == 0.07);  // sigma
  CHECK(read_u64(28) == 99);                           // seed
  CHECK(read_u64(36) == 4);                            // count
  CHECK(read_u64(44) == 0);                            // first sample
  CHECK(read_u64(52) == 1);
}

TEST_CASE("decoding rejects tampered bytes with the right diagnosis") {
  const std::vector<std::byte> good = encode_stream(sample_stream());

  auto mutated = [&](std::size_t off, std::uint8_t value) {
    std::vector<std::byte> b = good;
    b[off] = static_cast<std::byte>(value);
    return b;
  };

  CHECK_THROWS_AS(decode_stream(mutated(0, 'X')), FormatError);          // magic
  CHECK_THROWS_AS(decode_stream(mutated(4, 9)), FormatError);            // version
  CHECK_THROWS_AS(decode_stream(mutated(6, 0)), FormatError);            // n_bits 0
  CHECK_THROWS_AS(decode_stream(mutated(6, 65)), FormatError);           // n_bits 65
  CHECK_THROWS_AS(decode_stream(mutated(8, 3)), FormatError);            // mode
  CHECK_THROWS_AS(decode_stream(mutated(9, 0x02)), FormatError);         // flags
  CHECK_THROWS_AS(decode_stream(mutated(10, 1)), FormatError);           // reserved

  // A payload value above G0 for n_bits=12.
  std::vector<std::byte> high = good;
  high[44 + 8 * 2 + 1] = static_cast<std::byte>(0x10);  // sample 2 -> 0x1001 > 4095
  CHECK_THROWS_AS(decode_stream(high), FormatError);

  // Truncations at every structural boundary.
  auto prefix = [&](std::size_t len) {
    return std::vector<std::byte>(good.begin(), good.begin() + static_cast<long>(len));
  };
  CHECK_THROWS_AS(decode_stream(prefix(10)), FormatError);                 // header
  CHECK_THROWS_AS(decode_stream(prefix(kStreamHeaderBytes + 8)), FormatError);  // payload
  CHECK_THROWS_AS(decode_stream(prefix(kStreamHeaderBytes + 32 + 2)), FormatError);  // length
  CHECK_THROWS_AS(decode_stream(prefix(good.size() - 3)), FormatError);    // trailer body
}

TEST_CASE("decoding rejects corrupt trailer text") {
  const SampleStream s = sample_stream();
  const std::vector<std::byte> good = encode_stream(s);
  const std::size_t payload_end = kStreamHeaderBytes + 8 * s.values.size();

  auto with_trailer = [&](const std::string& text) {
    std::vector<std::byte> b(good.begin(), good.begin() + static_cast<long>(payload_end));
    for (int i = 0; i < 4; ++i)
      b.push_back(static_cast<std::byte>((text.size() >> (8 * i)) & 0xFF));
    for (const char c : text) b.push_back(static_cast<std::byte>(c));
    return b;
  };

  CHECK_NOTHROW(decode_stream(with_trailer("precision=9\n")));
  CHECK_THROWS_AS(decode_stream(with_trailer("no_such_key=1\n")), FormatError);
  CHECK_THROWS_AS(decode_stream(with_trailer("precision\n")), FormatError);
  CHECK_THROWS_AS(decode_stream(with_trailer("beta=squishy\n")), FormatError);
  CHECK_THROWS_AS(decode_stream(with_trailer("init=sideways\n")), FormatError);
  // Metadata that parses but fails validation is a format error too.
  CHECK_THROWS_AS(decode_stream(with_trailer("spacing_sweeps=0\n")), FormatError);
}

TEST_CASE("a trailer-free stream decodes with default run options") {
  const SampleStream s = sample_stream();
  std::vector<std::byte> b = encode_stream(s);
  const std::size_t payload_end = kStreamHeaderBytes + 8 * s.values.size();
  b.resize(payload_end);                // drop length word and trailer text
  b[9] = static_cast<std::byte>(0x00);  // clear the trailer flag
  const SampleStream d = decode_stream(b);
  CHECK(d.values == s.values);
  CHECK(d.spec.mu == s.spec.mu);
  CHECK(d.options.burn_in_sweeps == GenerateOptions{}.burn_in_sweeps);
  CHECK(d.options.chains == 1);
  CHECK(d.options.init == InitMode::random_bits);
  CHECK(d.spec.precision == 0);  // trailer-only field falls back to untruncated
}

TEST_CASE("binary file write and read round-trip") {
  const std::string path = temp_path("pgrn_io_roundtrip.pgrn");
  const FileGuard guard(path);
  const SampleStream s = sample_stream();
  write_stream_binary(s, path);
  const SampleStream d = read_stream_binary(path);
  CHECK(d.values == s.values);
  CHECK(d.spec.precision == s.spec.precision);
  CHECK(d.options.chains == s.options.chains);
}

TEST_CASE("file errors surface as io failures") {
  CHECK_THROWS_AS(read_stream_binary("/nonexistent_dir_zz/x.pgrn"), IoError);
  CHECK_THROWS_AS(write_stream_binary(sample_stream(), "/nonexistent_dir_zz/x.pgrn"),
                  IoError);
  CHECK_THROWS_AS(write_stream_csv(sample_stream(), "/nonexistent_dir_zz/x.csv"),
                  IoError);
  CHECK_THROWS_AS(read_stream_csv("/nonexistent_dir_zz/x.csv"), IoError);
}

TEST_CASE("csv export carries the exact readouts back") {
  const std::string path = temp_path("pgrn_io_roundtrip.csv");
  const FileGuard guard(path);
  const SampleStream s = sample_stream();
  write_stream_csv(s, path);

  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "index,G,X");
  f.close();

  CHECK(read_stream_csv(path) == s.values);
}

TEST_CASE("csv reader rejects malformed rows") {
  const std::string path = temp_path("pgrn_io_bad.csv");
  const FileGuard guard(path);

  auto write_text = [&](const std::string& text) {
    std::ofstream f(path, std::ios::trunc);
    f << text;
  };

  write_text("");
  CHECK_THROWS_AS(read_stream_csv(path), FormatError);
  write_text("G,index,X\n0,1,0.0\n");
  CHECK_THROWS_AS(read_stream_csv(path), FormatError);
  write_text("index,G,X\n0\n");
  CHECK_THROWS_AS(read_stream_csv(path), FormatError);
  write_text("index,G,X\n0,notanumber,0.0\n");
  CHECK_THROWS_AS(read_stream_csv(path), FormatError);
  write_text("index,G,X\n0,12,0.5\n\n1,13,0.6\n");
  CHECK(read_stream_csv(path) == std::vector<std::uint64_t>{12, 13});
}

}  // TEST_SUITE

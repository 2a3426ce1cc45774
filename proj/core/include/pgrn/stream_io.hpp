#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pgrn/sampler.hpp"

namespace pgrn {

/// Binary stream layout (all little-endian):
///   magic "PGRN" | version u16 | n_bits u16 | mode u8 | flags u8 |
///   reserved u16 | mu f64 | sigma f64 | seed u64 | count u64 |
///   count x G u64 | [flags bit0: trailer u32 length + key=value lines]
/// The trailer carries the spec fields the fixed header has no slot for
/// (precision, beta, spacing, tau, burn-in), completing the replay record.
inline constexpr std::uint16_t kStreamFormatVersion = 1;
inline constexpr std::size_t kStreamHeaderBytes = 44;

std::vector<std::byte> encode_stream(const SampleStream& stream);
SampleStream decode_stream(std::span<const std::byte> bytes);

void write_stream_binary(const SampleStream& stream, const std::string& path);
SampleStream read_stream_binary(const std::string& path);

/// CSV form: header "index,G,X", X printed with 17 significant digits.
void write_stream_csv(const SampleStream& stream, const std::string& path);

/// CSV carries no metadata; the caller must supply the spec to interpret G.
std::vector<std::uint64_t> read_stream_csv(const std::string& path);

}  // namespace pgrn

#include "pgrn/stream_io.hpp"

#include <bit>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pgrn {

namespace {

constexpr std::uint8_t kFlagTrailer = 0x01;

void put_u16(std::vector<std::byte>& out, std::uint16_t v) {
  out.push_back(static_cast<std::byte>(v & 0xFF));
  out.push_back(static_cast<std::byte>(v >> 8));
}

void put_u32(std::vector<std::byte>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::vector<std::byte>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xFF));
}

void put_f64(std::vector<std::byte>& out, double v) {
  put_u64(out, std::bit_cast<std::uint64_t>(v));
}

std::uint16_t get_u16(std::span<const std::byte> b, std::size_t off) {
  return static_cast<std::uint16_t>(static_cast<std::uint16_t>(b[off]) |
                                    (static_cast<std::uint16_t>(b[off + 1]) << 8));
}

std::uint32_t get_u32(std::span<const std::byte> b, std::size_t off) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[off + i]) << (8 * i);
  return v;
}

std::uint64_t get_u64(std::span<const std::byte> b, std::size_t off) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[off + i]) << (8 * i);
  return v;
}

double get_f64(std::span<const std::byte> b, std::size_t off) {
  return std::bit_cast<double>(get_u64(b, off));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trailer_text(const SampleStream& s) {
  std::ostringstream os;
  os << "precision=" << s.spec.precision << "\n"
     << "beta=" << format_double(s.spec.beta) << "\n"
     << "spacing_sweeps=" << s.spec.spacing_sweeps << "\n"
     << "spacing_ps=" << format_double(s.spec.spacing_ps) << "\n"
     << "tau_corr_ps=" << format_double(s.spec.tau_corr_ps) << "\n"
     << "burn_in_sweeps=" << s.options.burn_in_sweeps << "\n"
     << "burn_in_tau_multiple=" << format_double(s.options.burn_in_tau_multiple)
     << "\n"
     << "chains=" << s.options.chains << "\n"
     << "init=" << init_mode_name(s.options.init) << "\n";
  return os.str();
}

void apply_trailer_line(SampleStream& s, const std::string& key,
                        const std::string& value, std::size_t offset) {
  try {
    if (key == "precision")
      s.spec.precision = std::stoi(value);
    else if (key == "beta")
      s.spec.beta = std::stod(value);
    else if (key == "spacing_sweeps")
      s.spec.spacing_sweeps = std::stoi(value);
    else if (key == "spacing_ps")
      s.spec.spacing_ps = std::stod(value);
    else if (key == "tau_corr_ps")
      s.spec.tau_corr_ps = std::stod(value);
    else if (key == "burn_in_sweeps")
      s.options.burn_in_sweeps = std::stoll(value);
    else if (key == "burn_in_tau_multiple")
      s.options.burn_in_tau_multiple = std::stod(value);
    else if (key == "chains")
      s.options.chains = std::stoi(value);
    else if (key == "init") {
      if (value == "random_bits")
        s.options.init = InitMode::random_bits;
      else if (value == "target_level")
        s.options.init = InitMode::target_level;
      else
        throw FormatError("unknown init mode \"" + value + "\" at offset " +
                          std::to_string(offset));
    } else
      throw FormatError("unknown trailer key \"" + key + "\" at offset " +
                        std::to_string(offset));
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception&) {
    throw FormatError("bad trailer value for \"" + key + "\" at offset " +
                      std::to_string(offset));
  }
}

}  // namespace

std::vector<std::byte> encode_stream(const SampleStream& stream) {
  std::vector<std::byte> out;
  out.reserve(kStreamHeaderBytes + 8 * stream.values.size() + 256);
  for (const char c : {'P', 'G', 'R', 'N'}) out.push_back(static_cast<std::byte>(c));
  put_u16(out, kStreamFormatVersion);
  put_u16(out, static_cast<std::uint16_t>(stream.spec.n_bits));
  out.push_back(static_cast<std::byte>(stream.spec.mode));
  out.push_back(static_cast<std::byte>(kFlagTrailer));
  put_u16(out, 0);  // reserved
  put_f64(out, stream.spec.mu);
  put_f64(out, stream.spec.sigma);
  put_u64(out, stream.seed);
  put_u64(out, stream.values.size());
  for (const std::uint64_t g : stream.values) put_u64(out, g);
  const std::string trailer = trailer_text(stream);
  put_u32(out, static_cast<std::uint32_t>(trailer.size()));
  for (const char c : trailer) out.push_back(static_cast<std::byte>(c));
  return out;
}

SampleStream decode_stream(std::span<const std::byte> bytes) {
  if (bytes.size() < kStreamHeaderBytes)
    throw FormatError("truncated header: need " + std::to_string(kStreamHeaderBytes) +
                      " bytes, file ends at offset " + std::to_string(bytes.size()));
  if (static_cast<char>(bytes[0]) != 'P' || static_cast<char>(bytes[1]) != 'G' ||
      static_cast<char>(bytes[2]) != 'R' || static_cast<char>(bytes[3]) != 'N')
    throw FormatError("bad magic at offset 0");
  const std::uint16_t version = get_u16(bytes, 4);
  if (version != kStreamFormatVersion)
    throw FormatError("unsupported version " + std::to_string(version) +
                      " at offset 4");

  SampleStream s;
  s.spec.n_bits = get_u16(bytes, 6);
  if (s.spec.n_bits < 1 || s.spec.n_bits > 64)
    throw FormatError("invalid n_bits " + std::to_string(s.spec.n_bits) +
                      " at offset 6");
  const auto mode_byte = static_cast<std::uint8_t>(bytes[8]);
  if (mode_byte > 2)
    throw FormatError("invalid mode " + std::to_string(mode_byte) + " at offset 8");
  s.spec.mode = static_cast<Mode>(mode_byte);
  const auto flags = static_cast<std::uint8_t>(bytes[9]);
  if (flags & ~kFlagTrailer)
    throw FormatError("unknown flags " + std::to_string(flags) + " at offset 9");
  if (get_u16(bytes, 10) != 0)
    throw FormatError("nonzero reserved field at offset 10");
  s.spec.mu = get_f64(bytes, 12);
  s.spec.sigma = get_f64(bytes, 20);
  s.seed = get_u64(bytes, 28);
  const std::uint64_t count = get_u64(bytes, 36);

  const std::size_t payload_end = kStreamHeaderBytes + 8 * count;
  if (bytes.size() < payload_end)
    throw FormatError("truncated payload: expected " + std::to_string(count) +
                      " samples ending at offset " + std::to_string(payload_end) +
                      ", file ends at offset " + std::to_string(bytes.size()));
  const std::uint64_t g0 = g0_for(s.spec.n_bits);
  s.values.resize(count);
  for (std::uint64_t m = 0; m < count; ++m) {
    const std::size_t off = kStreamHeaderBytes + 8 * m;
    s.values[m] = get_u64(bytes, off);
    if (s.values[m] > g0)
      throw FormatError("sample exceeds G0 at offset " + std::to_string(off));
  }

  if (flags & kFlagTrailer) {
    if (bytes.size() < payload_end + 4)
      throw FormatError("truncated trailer length at offset " +
                        std::to_string(payload_end));
    const std::uint32_t len = get_u32(bytes, payload_end);
    const std::size_t trailer_start = payload_end + 4;
    if (bytes.size() < trailer_start + len)
      throw FormatError("truncated trailer: expected " + std::to_string(len) +
                        " bytes at offset " + std::to_string(trailer_start));
    std::string text(len, '\0');
    for (std::uint32_t i = 0; i < len; ++i)
      text[i] = static_cast<char>(bytes[trailer_start + i]);
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw FormatError("malformed trailer line \"" + line + "\" at offset " +
                          std::to_string(trailer_start));
      apply_trailer_line(s, line.substr(0, eq), line.substr(eq + 1), trailer_start);
    }
  }

  try {
    s.spec.validate();
  } catch (const ConfigError& e) {
    throw FormatError(std::string("stream metadata invalid: ") + e.what());
  }
  return s;
}

void write_stream_binary(const SampleStream& stream, const std::string& path) {
  const std::vector<std::byte> bytes = encode_stream(stream);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path);
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!f) throw IoError("write failed: " + path);
}

SampleStream read_stream_binary(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for reading: " + path);
  std::vector<char> raw((std::istreambuf_iterator<char>(f)),
                        std::istreambuf_iterator<char>());
  if (f.bad()) throw IoError("read failed: " + path);
  return decode_stream(std::span(reinterpret_cast<const std::byte*>(raw.data()),
                                 raw.size()));
}

void write_stream_csv(const SampleStream& stream, const std::string& path) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path);
  const double g0d = std::ldexp(1.0, stream.spec.n_bits) - 1.0;
  f << "index,G,X\n";
  char buf[64];
  for (std::size_t i = 0; i < stream.values.size(); ++i) {
    const double x =
        (static_cast<double>(stream.values[i]) / g0d - stream.spec.mu) /
        stream.spec.sigma;
    std::snprintf(buf, sizeof buf, "%zu,%" PRIu64 ",%.17g\n", i, stream.values[i], x);
    f << buf;
  }
  if (!f) throw IoError("write failed: " + path);
}

std::vector<std::uint64_t> read_stream_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(f, line)) throw FormatError("empty file: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "index,G,X")
    throw FormatError("bad header at line 1: expected \"index,G,X\", got \"" + line +
                      "\"");
  std::vector<std::uint64_t> gs;
  std::size_t line_no = 1;
  while (std::getline(f, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos)
      throw FormatError("malformed row at line " + std::to_string(line_no));
    try {
      std::size_t used = 0;
      const std::string field = line.substr(c1 + 1, c2 - c1 - 1);
      const std::uint64_t g = std::stoull(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
      gs.push_back(g);
    } catch (const std::exception&) {
      throw FormatError("bad G value at line " + std::to_string(line_no));
    }
  }
  return gs;
}

}  // namespace pgrn

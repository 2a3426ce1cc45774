#pragma once

#include <string>

#include "pgrn/sampler.hpp"
#include "pgrn/spec.hpp"

namespace pgrn {

/// Canonical key=value echo of a resolved run configuration. Every output
/// format embeds this (or the equivalent JSON object) so any result can be
/// regenerated bit for bit.
std::string echo_spec(const GrngSpec& spec);
std::string echo_run_config(const GrngSpec& spec, std::uint64_t samples,
                            std::uint64_t seed, const GenerateOptions& opts);

/// Joins a file name onto the output directory: an explicit dir wins, then
/// the PGRN_OUT_DIR environment variable, then the current directory.
std::string resolve_out_path(const std::string& out_dir, const std::string& name);

/// Environment variable consulted for the default output directory.
inline constexpr const char* kOutDirEnvVar = "PGRN_OUT_DIR";

}  // namespace pgrn

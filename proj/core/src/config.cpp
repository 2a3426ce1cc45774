#include "pgrn/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace pgrn {

Mode parse_mode(const std::string& name) {
  if (name == "sequential_gibbs") return Mode::sequential_gibbs;
  if (name == "random_scan_gibbs") return Mode::random_scan_gibbs;
  if (name == "ct_autonomous") return Mode::ct_autonomous;
  throw ConfigError("unknown mode: " + name +
                    " (expected sequential_gibbs, random_scan_gibbs, or "
                    "ct_autonomous)");
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string echo_spec(const GrngSpec& spec) {
  std::ostringstream os;
  os << "n_bits=" << spec.n_bits << "\n"
     << "mu=" << fmt(spec.mu) << "\n"
     << "sigma=" << fmt(spec.sigma) << "\n"
     << "precision=" << spec.precision << "\n"
     << "beta=" << fmt(spec.beta) << "\n"
     << "mode=" << mode_name(spec.mode) << "\n"
     << "tau_corr_ps=" << fmt(spec.tau_corr_ps) << "\n"
     << "spacing_sweeps=" << spec.spacing_sweeps << "\n"
     << "spacing_ps=" << fmt(spec.spacing_ps) << "\n";
  return os.str();
}

std::string echo_run_config(const GrngSpec& spec, std::uint64_t samples,
                            std::uint64_t seed, const GenerateOptions& opts) {
  std::ostringstream os;
  os << echo_spec(spec) << "samples=" << samples << "\n"
     << "seed=" << seed << "\n"
     << "burn_in_sweeps=" << opts.burn_in_sweeps << "\n"
     << "burn_in_tau_multiple=" << fmt(opts.burn_in_tau_multiple) << "\n"
     << "chains=" << opts.chains << "\n"
     << "init=" << init_mode_name(opts.init) << "\n";
  return os.str();
}

std::string resolve_out_path(const std::string& out_dir, const std::string& name) {
  std::string dir = out_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv(kOutDirEnvVar)) dir = env;
  }
  if (dir.empty() || name.empty() || name.front() == '/') return name;
  if (dir.back() != '/') dir += '/';
  return dir + name;
}

}  // namespace pgrn

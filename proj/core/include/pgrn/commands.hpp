#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pgrn/oracle.hpp"
#include "pgrn/sampler.hpp"
#include "pgrn/stats.hpp"

namespace pgrn {

/// Command implementations live here as plain functions so tests can drive
/// them without spawning processes. Each writes its declared outputs, logs a
/// short human summary to `log`, and throws pgrn::Error subclasses on
/// failure; the executable maps those to exit codes.

struct GenerateArgs {
  GrngSpec spec;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  GenerateOptions opts;
  std::string out_binary;  // at least one output path is required
  std::string out_csv;
};
void cmd_generate(const GenerateArgs& args, std::ostream& log);

struct AnalyzeArgs {
  std::string input;
  bool input_csv = false;  // CSV carries no metadata:
  int csv_n_bits = 0;      // these three are required for CSV input
  double csv_mu = -1.0;
  double csv_sigma = 0.0;
  std::string report_json;
  std::string hist_csv;
  std::string acf_csv;
  std::string tail_csv;
  std::string svg_prefix;
  bool ascii = false;
  AnalyzeOptions opts;
};
AnalysisReport cmd_analyze(const AnalyzeArgs& args, std::ostream& log);

struct OracleArgs {
  GrngSpec spec;
  double tolerance = 1e-12;  // max relative pointwise pmf difference
  bool flip_sign = false;    // debug: negate couplings to prove the check bites
  std::string stream_path;   // optional empirical stream to test against
  std::string pmf_csv;       // optional export: G, probability
};
struct OracleResult {
  DistanceReport identity;
  double z_prime = 0.0;
  std::optional<double> empirical_tv;
  std::optional<Chi2Report> empirical_chi2;
};
OracleResult cmd_oracle(const OracleArgs& args, std::ostream& log);

struct SweepArgs {
  GrngSpec spec;
  std::vector<double> mu_list;     // exactly one list may be non-empty
  std::vector<double> sigma_list;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  GenerateOptions opts;
  std::string table_csv;
  std::string svg_path;
};
struct SweepRow {
  double desired = 0.0;
  double obtained = 0.0;      // swept parameter, histogram-fit value
  double mu_fit = 0.0;        // moment fit, G/G0 units
  double sigma_fit = 0.0;
  double mu_fit_curve = 0.0;  // histogram fit, G/G0 units
  double sigma_fit_curve = 0.0;
  double rmse = 0.0;
  std::uint64_t seed = 0;
};
struct SweepResult {
  std::string parameter;  // "mu" or "sigma"
  std::vector<SweepRow> rows;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  bool regression_valid = false;  // false for single-point sweeps
};
SweepResult cmd_sweep(const SweepArgs& args, std::ostream& log);

struct TruncationArgs {
  GrngSpec spec;  // precision field is ignored; p_list drives the study
  std::vector<int> p_list;
  std::vector<std::uint64_t> samples_list = {1'000'000};
  std::uint64_t seed = 1;  // shared across p: common random numbers
  GenerateOptions opts;
  std::vector<double> tail_levels = {1.0, 2.0, 3.0, 4.0};
  std::string table_csv;
  std::string tail_csv;
  std::string svg_path;
};
struct TruncationRow {
  int precision = 0;
  std::uint64_t samples = 0;
  double mu_fit = 0.0;
  double sigma_fit = 0.0;
  double rmse = 0.0;
};
struct TruncationResult {
  std::vector<TruncationRow> rows;
};
TruncationResult cmd_truncation_study(const TruncationArgs& args, std::ostream& log);

struct TailArgs {
  GrngSpec spec;
  int combine_k = 4;
  std::uint64_t samples_total = 10'000'000;  // split across the k generators
  std::uint64_t seed = 1;                    // master seed for derived chains
  std::vector<std::uint64_t> seeds;          // optional explicit per-chain seeds
  GenerateOptions opts;
  std::vector<double> levels = {1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};
  std::string tail_csv;
  std::string svg_path;
};
struct TailResult {
  std::vector<TailRow> combined;
  double max_abs_e_sigma_reliable = 0.0;
};
TailResult cmd_tail(const TailArgs& args, std::ostream& log);

struct InspectArgs {
  GrngSpec spec;
  bool dense = false;  // also dump kept J entries pairwise
  std::string out_path;
};
void cmd_inspect(const InspectArgs& args, std::ostream& out);

struct AutocorrArgs {
  std::string input;  // stream path; unused in free-p-bit mode
  bool input_csv = false;
  int csv_n_bits = 0;
  double csv_mu = -1.0;
  double csv_sigma = 0.0;
  bool free_pbit = false;  // analyze a single-device telegraph trace instead
  double bias = 0.0;
  double tau_ps = 380.0;
  std::uint64_t steps = 1'000'000;
  double dt_ps = 1.0;
  std::uint64_t seed = 1;
  int max_lag = 100;
  bool fit_tau = false;
  std::string acf_csv;
  std::string svg_path;
};
struct AutocorrResult {
  std::vector<double> acf;
  std::optional<double> tau_fit;
  double guide = 0.0;  // 3/sqrt(series length)
  double trace_mean = 0.0;  // free-p-bit mode only
};
AutocorrResult cmd_autocorr(const AutocorrArgs& args, std::ostream& log);

}  // namespace pgrn

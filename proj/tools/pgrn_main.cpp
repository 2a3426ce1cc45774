#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgrn/commands.hpp"
#include "pgrn/config.hpp"
#include "pgrn/errors.hpp"

namespace {

struct SpecFlags {
  int n_bits = 64;
  double mu = 0.5;
  double sigma = 0.1;
  int precision = 0;
  double beta = 1.0;
  std::string mode = "random_scan_gibbs";
  double tau_corr_ps = 380.0;
  int spacing_sweeps = 8;
  double spacing_ps = 2000.0;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
  cmd->add_option("--n_bits", f.n_bits, "network size N in [1, 64]")
      ->capture_default_str();
  cmd->add_option("--mu", f.mu, "target mean in units of G0")->capture_default_str();
  cmd->add_option("--sigma", f.sigma, "target std dev in units of G0")
      ->capture_default_str();
  cmd->add_option("--precision", f.precision,
                  "kept weight-bit budget p; 0 = untruncated")
      ->capture_default_str();
  cmd->add_option("--beta", f.beta, "inverse temperature")->capture_default_str();
  cmd->add_option("--mode", f.mode,
                  "sequential_gibbs | random_scan_gibbs | ct_autonomous")
      ->capture_default_str();
  cmd->add_option("--tau_corr_ps", f.tau_corr_ps, "p-bit correlation time (ct mode)")
      ->capture_default_str();
  cmd->add_option("--spacing_sweeps", f.spacing_sweeps,
                  "sweeps between retained samples (Gibbs modes)")
      ->capture_default_str();
  cmd->add_option("--spacing_ps", f.spacing_ps,
                  "simulated time between retained samples (ct mode)")
      ->capture_default_str();
}

pgrn::GrngSpec to_spec(const SpecFlags& f) {
  pgrn::GrngSpec s;
  s.n_bits = f.n_bits;
  s.mu = f.mu;
  s.sigma = f.sigma;
  s.precision = f.precision;
  s.beta = f.beta;
  s.mode = pgrn::parse_mode(f.mode);
  s.tau_corr_ps = f.tau_corr_ps;
  s.spacing_sweeps = f.spacing_sweeps;
  s.spacing_ps = f.spacing_ps;
  return s;
}

void add_common(CLI::App* cmd, std::string& out_dir) {
  cmd->add_option("--out_dir", out_dir, "directory for output files")
      ->envname(pgrn::kOutDirEnvVar);
}

void add_burn_in(CLI::App* cmd, pgrn::GenerateOptions& opts) {
  cmd->add_option("--burn_in_sweeps", opts.burn_in_sweeps,
                  "discarded sweeps before sampling (Gibbs modes)")
      ->capture_default_str();
  cmd->add_option("--burn_in_tau_multiple", opts.burn_in_tau_multiple,
                  "discarded time in units of tau (ct mode)")
      ->capture_default_str();
  cmd->add_option("--chains", opts.chains,
                  "independent restarts pooled into one stream")
      ->capture_default_str();
  cmd->add_option_function<std::string>(
         "--init",
         [&opts](const std::string& v) {
           if (v == "random_bits")
             opts.init = pgrn::InitMode::random_bits;
           else if (v == "target_level")
             opts.init = pgrn::InitMode::target_level;
           else
             throw CLI::ValidationError("--init", "must be random_bits or target_level");
         },
         "chain start: random_bits | target_level")
      ->default_str("random_bits");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-bit network Gaussian random number generator: simulator and "
               "verification toolkit"};
  app.require_subcommand(1);
  // One INI file can hold flags for any command, each under a [command]
  // section. Config processing happens on the root app, so the option lives
  // here and fallthrough() lets it be written after the command name;
  // command-line flags override file values.
  app.set_config("--config", "",
                 "INI config file with one [command] section per command");
  app.allow_config_extras(false);
  app.fallthrough();

  // generate
  auto g_spec = SpecFlags{};
  auto g_args = pgrn::GenerateArgs{};
  std::string g_dir;
  auto* generate = app.add_subcommand("generate", "sample a G stream to disk");
  add_spec_flags(generate, g_spec);
  add_common(generate, g_dir);
  add_burn_in(generate, g_args.opts);
  generate->add_option("--samples,-m", g_args.samples, "number of retained samples")
      ->capture_default_str();
  generate->add_option("--seed", g_args.seed, "PRNG seed")->capture_default_str();
  generate->add_option("--out", g_args.out_binary, "binary stream output path");
  generate->add_option("--csv", g_args.out_csv, "CSV stream output path");
  generate->callback([&] {
    g_args.spec = to_spec(g_spec);
    g_args.out_binary = pgrn::resolve_out_path(g_dir, g_args.out_binary);
    g_args.out_csv = pgrn::resolve_out_path(g_dir, g_args.out_csv);
    pgrn::cmd_generate(g_args, std::cout);
  });

  // analyze
  auto a_args = pgrn::AnalyzeArgs{};
  std::string a_dir;
  auto* analyze = app.add_subcommand("analyze", "full statistical report for a stream");
  add_common(analyze, a_dir);
  analyze->add_option("--in", a_args.input, "input stream path")->required();
  analyze->add_flag("--in_csv", a_args.input_csv, "input is CSV (needs n_bits/mu/sigma)");
  analyze->add_option("--n_bits", a_args.csv_n_bits, "n_bits for CSV input");
  analyze->add_option("--mu", a_args.csv_mu, "mu for CSV input");
  analyze->add_option("--sigma", a_args.csv_sigma, "sigma for CSV input");
  analyze->add_option("--report", a_args.report_json, "JSON report output path");
  analyze->add_option("--hist_csv", a_args.hist_csv, "histogram CSV output path");
  analyze->add_option("--acf_csv", a_args.acf_csv, "autocorrelation CSV output path");
  analyze->add_option("--tail_csv", a_args.tail_csv, "tail table CSV output path");
  analyze->add_option("--svg_prefix", a_args.svg_prefix,
                      "write <prefix>_hist.svg, _acf.svg, _tail.svg");
  analyze->add_flag("--ascii", a_args.ascii, "print an ASCII histogram");
  analyze->add_option("--max_lag", a_args.opts.max_lag, "autocorrelation lags")
      ->capture_default_str();
  analyze->add_option("--tail_levels", a_args.opts.tail_levels, "tail deviate levels")
      ->delimiter(',');
  analyze->callback([&] {
    a_args.input = pgrn::resolve_out_path(a_dir, a_args.input);
    a_args.report_json = pgrn::resolve_out_path(a_dir, a_args.report_json);
    a_args.hist_csv = pgrn::resolve_out_path(a_dir, a_args.hist_csv);
    a_args.acf_csv = pgrn::resolve_out_path(a_dir, a_args.acf_csv);
    a_args.tail_csv = pgrn::resolve_out_path(a_dir, a_args.tail_csv);
    a_args.svg_prefix = pgrn::resolve_out_path(a_dir, a_args.svg_prefix);
    pgrn::cmd_analyze(a_args, std::cout);
  });

  // oracle
  auto o_spec = SpecFlags{};
  o_spec.n_bits = 6;
  auto o_args = pgrn::OracleArgs{};
  std::string o_dir;
  auto* oracle = app.add_subcommand(
      "oracle", "exact enumeration vs the ideal discretized Gaussian");
  add_spec_flags(oracle, o_spec);
  add_common(oracle, o_dir);
  oracle->add_option("--tolerance", o_args.tolerance,
                     "max relative pointwise pmf difference")
      ->capture_default_str();
  oracle->add_flag("--flip_sign", o_args.flip_sign,
                   "debug: negate couplings; the identity check must then fail");
  oracle->add_option("--stream", o_args.stream_path,
                     "binary stream to compare empirically");
  oracle->add_option("--pmf_csv", o_args.pmf_csv, "exact pmf CSV output path");
  oracle->callback([&] {
    o_args.spec = to_spec(o_spec);
    o_args.stream_path = pgrn::resolve_out_path(o_dir, o_args.stream_path);
    o_args.pmf_csv = pgrn::resolve_out_path(o_dir, o_args.pmf_csv);
    pgrn::cmd_oracle(o_args, std::cout);
  });

  // sweep
  auto s_spec = SpecFlags{};
  auto s_args = pgrn::SweepArgs{};
  std::string s_dir;
  auto* sweep = app.add_subcommand("sweep", "desired-vs-obtained parameter sweep");
  add_spec_flags(sweep, s_spec);
  add_common(sweep, s_dir);
  add_burn_in(sweep, s_args.opts);
  sweep->add_option("--mu_list", s_args.mu_list, "desired mu values")->delimiter(',');
  sweep->add_option("--sigma_list", s_args.sigma_list, "desired sigma values")
      ->delimiter(',');
  sweep->add_option("--samples,-m", s_args.samples, "samples per point")
      ->capture_default_str();
  sweep->add_option("--seed", s_args.seed, "master seed (per-point seeds derived)")
      ->capture_default_str();
  sweep->add_option("--table_csv", s_args.table_csv, "result table output path");
  sweep->add_option("--svg", s_args.svg_path, "desired-vs-obtained SVG path");
  sweep->callback([&] {
    s_args.spec = to_spec(s_spec);
    s_args.table_csv = pgrn::resolve_out_path(s_dir, s_args.table_csv);
    s_args.svg_path = pgrn::resolve_out_path(s_dir, s_args.svg_path);
    pgrn::cmd_sweep(s_args, std::cout);
  });

  // truncation-study
  auto t_spec = SpecFlags{};
  auto t_args = pgrn::TruncationArgs{};
  std::string t_dir;
  auto* trunc = app.add_subcommand("truncation-study",
                                   "normalized RMSE and tails across precisions");
  add_spec_flags(trunc, t_spec);
  add_common(trunc, t_dir);
  add_burn_in(trunc, t_args.opts);
  trunc->add_option("--p_list", t_args.p_list, "precision values")
      ->delimiter(',')
      ->required();
  trunc->add_option("--samples_list", t_args.samples_list, "sample sizes")
      ->delimiter(',');
  trunc->add_option("--seed", t_args.seed, "seed shared across precisions")
      ->capture_default_str();
  trunc->add_option("--tail_levels", t_args.tail_levels, "tail deviate levels")
      ->delimiter(',');
  trunc->add_option("--table_csv", t_args.table_csv, "RMSE table output path");
  trunc->add_option("--tail_csv", t_args.tail_csv, "per-precision tail CSV path");
  trunc->add_option("--svg", t_args.svg_path, "RMSE-vs-p SVG path");
  trunc->callback([&] {
    t_args.spec = to_spec(t_spec);
    t_args.table_csv = pgrn::resolve_out_path(t_dir, t_args.table_csv);
    t_args.tail_csv = pgrn::resolve_out_path(t_dir, t_args.tail_csv);
    t_args.svg_path = pgrn::resolve_out_path(t_dir, t_args.svg_path);
    pgrn::cmd_truncation_study(t_args, std::cout);
  });

  // tail
  auto l_spec = SpecFlags{};
  auto l_args = pgrn::TailArgs{};
  std::string l_dir;
  auto* tail = app.add_subcommand("tail", "combined-generator tail accuracy");
  add_spec_flags(tail, l_spec);
  add_common(tail, l_dir);
  add_burn_in(tail, l_args.opts);
  tail->add_option("--combine_k,-k", l_args.combine_k, "generators to combine")
      ->capture_default_str();
  tail->add_option("--samples_total", l_args.samples_total,
                   "total samples across all generators")
      ->capture_default_str();
  tail->add_option("--seed", l_args.seed, "master seed (chain seeds derived)")
      ->capture_default_str();
  tail->add_option("--seeds", l_args.seeds, "explicit per-chain seeds (distinct)")
      ->delimiter(',');
  tail->add_option("--levels", l_args.levels, "tail deviate levels")->delimiter(',');
  tail->add_option("--tail_csv", l_args.tail_csv, "tail table output path");
  tail->add_option("--svg", l_args.svg_path, "e_sigma-vs-deviate SVG path");
  tail->callback([&] {
    l_args.spec = to_spec(l_spec);
    l_args.tail_csv = pgrn::resolve_out_path(l_dir, l_args.tail_csv);
    l_args.svg_path = pgrn::resolve_out_path(l_dir, l_args.svg_path);
    pgrn::cmd_tail(l_args, std::cout);
  });

  // inspect
  auto i_spec = SpecFlags{};
  auto i_args = pgrn::InspectArgs{};
  std::string i_dir;
  auto* inspect = app.add_subcommand("inspect", "dump the coupling network");
  add_spec_flags(inspect, i_spec);
  add_common(inspect, i_dir);
  inspect->add_flag("--dense", i_args.dense, "also dump kept pairwise J entries");
  inspect->add_option("--out", i_args.out_path, "also write the dump to a file");
  inspect->callback([&] {
    i_args.spec = to_spec(i_spec);
    i_args.out_path = pgrn::resolve_out_path(i_dir, i_args.out_path);
    pgrn::cmd_inspect(i_args, std::cout);
  });

  // autocorr
  auto c_args = pgrn::AutocorrArgs{};
  std::string c_dir;
  auto* autoc = app.add_subcommand("autocorr",
                                   "autocorrelation of a stream or a free p-bit");
  add_common(autoc, c_dir);
  autoc->add_option("--in", c_args.input, "input stream path");
  autoc->add_flag("--in_csv", c_args.input_csv, "input is CSV (needs n_bits/mu/sigma)");
  autoc->add_option("--n_bits", c_args.csv_n_bits, "n_bits for CSV input");
  autoc->add_option("--mu", c_args.csv_mu, "mu for CSV input");
  autoc->add_option("--sigma", c_args.csv_sigma, "sigma for CSV input");
  autoc->add_flag("--free_pbit", c_args.free_pbit,
                  "simulate and analyze a single free p-bit instead");
  autoc->add_option("--bias", c_args.bias, "free p-bit input bias")
      ->capture_default_str();
  autoc->add_option("--tau_corr_ps", c_args.tau_ps, "free p-bit correlation time")
      ->capture_default_str();
  autoc->add_option("--steps", c_args.steps, "free p-bit trace length")
      ->capture_default_str();
  autoc->add_option("--dt_ps", c_args.dt_ps, "free p-bit time step")
      ->capture_default_str();
  autoc->add_option("--seed", c_args.seed, "PRNG seed")->capture_default_str();
  autoc->add_option("--max_lag", c_args.max_lag, "lags to compute")
      ->capture_default_str();
  autoc->add_flag("--fit_tau", c_args.fit_tau, "fit an exponential decay time");
  autoc->add_option("--acf_csv", c_args.acf_csv, "autocorrelation CSV output path");
  autoc->add_option("--svg", c_args.svg_path, "stem plot SVG path");
  autoc->callback([&] {
    c_args.input = pgrn::resolve_out_path(c_dir, c_args.input);
    c_args.acf_csv = pgrn::resolve_out_path(c_dir, c_args.acf_csv);
    c_args.svg_path = pgrn::resolve_out_path(c_dir, c_args.svg_path);
    pgrn::cmd_autocorr(c_args, std::cout);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(pgrn::ExitCode::usage);
  } catch (const pgrn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

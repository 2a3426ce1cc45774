#include "pgrn/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <span>
#include <sstream>

#include "json.hpp"
#include "pgrn/config.hpp"
#include "pgrn/plot.hpp"
#include "pgrn/stream_io.hpp"

namespace pgrn {

namespace {

using nlohmann::json;

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << content;
  if (!f) throw IoError("write failed: " + path);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Key=value echo rendered as CSV/SVG-safe comment lines.
std::string as_comments(const std::string& echo) {
  std::istringstream is(echo);
  std::ostringstream os;
  std::string line;
  while (std::getline(is, line)) os << "# " << line << "\n";
  return os.str();
}

json spec_to_json(const GrngSpec& spec) {
  return json{{"n_bits", spec.n_bits},
              {"mu", spec.mu},
              {"sigma", spec.sigma},
              {"precision", spec.precision},
              {"beta", spec.beta},
              {"mode", mode_name(spec.mode)},
              {"tau_corr_ps", spec.tau_corr_ps},
              {"spacing_sweeps", spec.spacing_sweeps},
              {"spacing_ps", spec.spacing_ps}};
}

json tail_to_json(const std::vector<TailRow>& rows) {
  json arr = json::array();
  for (const TailRow& r : rows)
    arr.push_back(json{{"x_level", r.x_level},
                       {"p_level", r.p_level},
                       {"sigma_obtained", r.sigma_obtained},
                       {"sigma_ideal", r.sigma_ideal},
                       {"e_sigma", r.e_sigma},
                       {"reliable", r.reliable}});
  return arr;
}

std::string tail_rows_csv(const std::vector<TailRow>& rows) {
  std::ostringstream os;
  os << "x_level,p_level,sigma_obtained,sigma_ideal,e_sigma,reliable\n";
  for (const TailRow& r : rows)
    os << fmt(r.x_level) << "," << fmt(r.p_level) << "," << fmt(r.sigma_obtained)
       << "," << fmt(r.sigma_ideal) << "," << fmt(r.e_sigma) << ","
       << (r.reliable ? 1 : 0) << "\n";
  return os.str();
}

SampleStream load_stream(const std::string& path, bool csv, int csv_n_bits,
                         double csv_mu, double csv_sigma) {
  if (!csv) return read_stream_binary(path);
  if (csv_n_bits == 0 || csv_mu < 0.0 || !(csv_sigma > 0.0))
    throw ConfigError(
        "CSV input carries no metadata; pass n_bits, mu, and sigma explicitly");
  SampleStream s;
  s.spec.n_bits = csv_n_bits;
  s.spec.mu = csv_mu;
  s.spec.sigma = csv_sigma;
  s.spec.validate();
  s.values = read_stream_csv(path);
  const std::uint64_t g0 = s.spec.g0();
  for (const auto g : s.values)
    if (g > g0) throw FormatError("CSV sample exceeds G0 for n_bits=" +
                                  std::to_string(csv_n_bits));
  return s;
}

struct Regression {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  bool valid = false;
};

Regression linear_fit(std::span<const double> x, std::span<const double> y) {
  Regression reg;
  const std::size_t n = x.size();
  if (n < 2) return reg;
  long double sx = 0.0L, sy = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const long double mx = sx / static_cast<long double>(n);
  const long double my = sy / static_cast<long double>(n);
  long double sxx = 0.0L, syy = 0.0L, sxy = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double dx = x[i] - mx;
    const long double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (!(sxx > 0.0L)) return reg;
  reg.slope = static_cast<double>(sxy / sxx);
  reg.intercept = static_cast<double>(my - (sxy / sxx) * mx);
  reg.r2 = syy > 0.0L ? static_cast<double>((sxy * sxy) / (sxx * syy)) : 0.0;
  reg.valid = true;
  return reg;
}

}  // namespace

void cmd_generate(const GenerateArgs& args, std::ostream& log) {
  if (args.out_binary.empty() && args.out_csv.empty())
    throw ConfigError("generate needs at least one output path");
  const SampleStream stream = generate(args.spec, args.samples, args.seed, args.opts);
  if (!args.out_binary.empty()) write_stream_binary(stream, args.out_binary);
  if (!args.out_csv.empty()) write_stream_csv(stream, args.out_csv);
  log << "generated " << stream.values.size() << " samples, n_bits="
      << args.spec.n_bits << ", mode=" << mode_name(args.spec.mode) << ", seed="
      << args.seed << "\n";
}

AnalysisReport cmd_analyze(const AnalyzeArgs& args, std::ostream& log) {
  const SampleStream stream =
      load_stream(args.input, args.input_csv, args.csv_n_bits, args.csv_mu,
                  args.csv_sigma);
  const AnalysisReport rep = analyze_stream(stream, args.opts);
  const std::string echo =
      echo_run_config(stream.spec, stream.values.size(), stream.seed, stream.options);

  if (!args.report_json.empty()) {
    json j;
    j["config"] = spec_to_json(rep.spec);
    j["config"]["samples"] = rep.m_samples;
    j["config"]["seed"] = rep.seed;
    j["config"]["burn_in_sweeps"] = stream.options.burn_in_sweeps;
    j["config"]["burn_in_tau_multiple"] = stream.options.burn_in_tau_multiple;
    j["config"]["chains"] = stream.options.chains;
    j["config"]["init"] = init_mode_name(stream.options.init);
    j["fit"] = json{{"mu", rep.mu_fit},
                    {"sigma", rep.sigma_fit},
                    {"mu_curve", rep.mu_fit_curve},
                    {"sigma_curve", rep.sigma_fit_curve},
                    {"rmse_normalized", rep.rmse_normalized}};
    j["independence"] = json{{"lag1_scatter_corr", rep.lag1_scatter_corr},
                             {"bound_3_over_sqrt_m",
                              3.0 / std::sqrt(static_cast<double>(rep.m_samples))},
                             {"autocorr", rep.lag_autocorr}};
    j["tails"] = tail_to_json(rep.tail_table);
    j["histogram"] = json{{"lo", rep.histogram.lo},
                          {"hi", rep.histogram.hi},
                          {"total", rep.histogram.total},
                          {"in_range", rep.histogram.in_range},
                          {"counts", rep.histogram.counts}};
    write_text_file(args.report_json, j.dump(2) + "\n");
  }
  if (!args.hist_csv.empty()) {
    std::ostringstream os;
    os << as_comments(echo) << "center,count,density\n";
    for (int k = 0; k < rep.histogram.bins(); ++k)
      os << fmt(rep.histogram.center(k)) << "," << rep.histogram.counts[k] << ","
         << fmt(rep.histogram.density(k)) << "\n";
    write_text_file(args.hist_csv, os.str());
  }
  if (!args.acf_csv.empty()) {
    std::ostringstream os;
    os << as_comments(echo) << "lag,autocorr\n";
    for (std::size_t l = 0; l < rep.lag_autocorr.size(); ++l)
      os << l << "," << fmt(rep.lag_autocorr[l]) << "\n";
    write_text_file(args.acf_csv, os.str());
  }
  if (!args.tail_csv.empty())
    write_text_file(args.tail_csv, as_comments(echo) + tail_rows_csv(rep.tail_table));
  if (!args.svg_prefix.empty()) {
    FitResult fit_x;
    fit_x.mu = (rep.mu_fit_curve - rep.mu_desired) / rep.sigma_desired;
    fit_x.sigma = rep.sigma_fit_curve / rep.sigma_desired;
    write_text_file(args.svg_prefix + "_hist.svg",
                    svg_histogram(rep.histogram, fit_x));
    const double guide = 3.0 / std::sqrt(static_cast<double>(rep.m_samples));
    write_text_file(args.svg_prefix + "_acf.svg",
                    svg_stem(rep.lag_autocorr, guide, "autocorrelation"));
    std::vector<double> levels;
    std::vector<double> es;
    for (const TailRow& r : rep.tail_table)
      if (r.reliable) {
        levels.push_back(r.x_level);
        es.push_back(r.e_sigma);
      }
    if (levels.size() >= 2)
      write_text_file(args.svg_prefix + "_tail.svg",
                      svg_xy(levels, es, "deviate", "e_sigma"));
  }
  if (args.ascii) log << ascii_histogram(rep.histogram);

  log << "samples=" << rep.m_samples << " mu_fit=" << fmt(rep.mu_fit)
      << " sigma_fit=" << fmt(rep.sigma_fit) << " rmse=" << fmt(rep.rmse_normalized)
      << " lag1_scatter=" << fmt(rep.lag1_scatter_corr) << "\n";
  return rep;
}

OracleResult cmd_oracle(const OracleArgs& args, std::ostream& log) {
  args.spec.validate();
  CouplingSet c = build_couplings(args.spec);
  if (args.flip_sign) {
    for (auto& v : c.jB) v = -v;
    for (auto& v : c.h) v = -v;
  }
  const ExactDistribution exact = enumerate_boltzmann(c);
  const double sigma_eff = args.spec.sigma / std::sqrt(args.spec.beta);
  const std::vector<double> target =
      target_pmf(args.spec.n_bits, args.spec.mu, sigma_eff);

  OracleResult res;
  res.identity = compare_distributions(exact.pmf, target);
  res.z_prime = exact.z_prime;

  if (!args.pmf_csv.empty()) {
    std::ostringstream os;
    os << as_comments(echo_spec(args.spec)) << "G,probability\n";
    for (std::size_t g = 0; g < exact.pmf.size(); ++g)
      os << g << "," << fmt(exact.pmf[g]) << "\n";
    write_text_file(args.pmf_csv, os.str());
  }

  if (!args.stream_path.empty()) {
    const SampleStream stream = read_stream_binary(args.stream_path);
    if (stream.spec.n_bits != args.spec.n_bits)
      throw ConfigError("stream n_bits " + std::to_string(stream.spec.n_bits) +
                        " does not match oracle n_bits " +
                        std::to_string(args.spec.n_bits));
    std::vector<std::uint64_t> counts(exact.pmf.size(), 0);
    for (const auto g : stream.values) ++counts[g];
    std::vector<double> empirical(counts.size());
    for (std::size_t g = 0; g < counts.size(); ++g)
      empirical[g] = static_cast<double>(counts[g]) /
                     static_cast<double>(stream.values.size());
    res.empirical_tv = compare_distributions(empirical, exact.pmf).total_variation;
    res.empirical_chi2 = chi_squared_gof(counts, exact.pmf);
  }

  log << "z_prime=" << fmt(res.z_prime)
      << " max_rel_diff=" << fmt(res.identity.max_rel_diff)
      << " max_abs_diff=" << fmt(res.identity.max_abs_diff)
      << " tv=" << fmt(res.identity.total_variation) << "\n";
  if (res.empirical_tv)
    log << "empirical tv=" << fmt(*res.empirical_tv)
        << " chi2=" << fmt(res.empirical_chi2->statistic)
        << " dof=" << res.empirical_chi2->dof
        << " p_value=" << fmt(res.empirical_chi2->p_value) << "\n";

  if (res.identity.max_rel_diff > args.tolerance)
    throw ToleranceError("enumerated pmf deviates from the target by " +
                         fmt(res.identity.max_rel_diff) +
                         " relative (tolerance " + fmt(args.tolerance) + ")");
  return res;
}

SweepResult cmd_sweep(const SweepArgs& args, std::ostream& log) {
  const bool mu_sweep = !args.mu_list.empty();
  if (mu_sweep == !args.sigma_list.empty())
    throw ConfigError("sweep exactly one of mu_list / sigma_list");
  const auto& desired = mu_sweep ? args.mu_list : args.sigma_list;

  SweepResult res;
  res.parameter = mu_sweep ? "mu" : "sigma";
  for (std::size_t idx = 0; idx < desired.size(); ++idx) {
    GrngSpec spec = args.spec;
    (mu_sweep ? spec.mu : spec.sigma) = desired[idx];
    spec.validate();
    const std::uint64_t chain_seed = derive_seed(args.seed, idx);
    const SampleStream stream = generate(spec, args.samples, chain_seed, args.opts);
    const std::vector<double> xs = to_x(stream);
    const FitResult fm = fit_gaussian(xs, FitMethod::moments);
    const FitResult fc =
        fit_gaussian(xs, FitMethod::histogram_least_squares,
                     (0.0 - spec.mu) / spec.sigma, (1.0 - spec.mu) / spec.sigma);

    SweepRow row;
    row.desired = desired[idx];
    row.mu_fit = spec.mu + spec.sigma * fm.mu;
    row.sigma_fit = spec.sigma * fm.sigma;
    row.mu_fit_curve = spec.mu + spec.sigma * fc.mu;
    row.sigma_fit_curve = spec.sigma * fc.sigma;
    // The histogram fit reads the distribution core, so a range-limited
    // generator (mu +- 5 sigma wider than [0, 1]) still reports the shape
    // parameter instead of the clipped-moment value.
    row.obtained = mu_sweep ? row.mu_fit_curve : row.sigma_fit_curve;
    row.rmse = normalized_rmse(xs, fc);
    row.seed = chain_seed;
    res.rows.push_back(row);
    log << res.parameter << "=" << fmt(row.desired) << " obtained="
        << fmt(row.obtained) << " rmse=" << fmt(row.rmse) << "\n";
  }

  std::vector<double> xs_fit;
  std::vector<double> ys_fit;
  for (const SweepRow& r : res.rows) {
    xs_fit.push_back(r.desired);
    ys_fit.push_back(r.obtained);
  }
  const Regression reg = linear_fit(xs_fit, ys_fit);
  res.slope = reg.slope;
  res.intercept = reg.intercept;
  res.r2 = reg.r2;
  res.regression_valid = reg.valid;
  if (reg.valid)
    log << "slope=" << fmt(res.slope) << " intercept=" << fmt(res.intercept)
        << " r2=" << fmt(res.r2) << "\n";

  if (!args.table_csv.empty()) {
    std::ostringstream os;
    os << as_comments(echo_spec(args.spec)) << "# sweep_parameter=" << res.parameter
       << "\n# samples_per_point=" << args.samples << "\n";
    if (res.regression_valid)
      os << "# slope=" << fmt(res.slope) << "\n# intercept=" << fmt(res.intercept)
         << "\n# r2=" << fmt(res.r2) << "\n";
    os << "desired,obtained,mu_fit,sigma_fit,mu_fit_curve,sigma_fit_curve,rmse,seed\n";
    for (const SweepRow& r : res.rows)
      os << fmt(r.desired) << "," << fmt(r.obtained) << "," << fmt(r.mu_fit) << ","
         << fmt(r.sigma_fit) << "," << fmt(r.mu_fit_curve) << ","
         << fmt(r.sigma_fit_curve) << "," << fmt(r.rmse) << "," << r.seed << "\n";
    write_text_file(args.table_csv, os.str());
  }
  if (!args.svg_path.empty() && res.rows.size() >= 2)
    write_text_file(args.svg_path,
                    svg_xy(xs_fit, ys_fit, "desired " + res.parameter,
                           "obtained " + res.parameter));
  return res;
}

TruncationResult cmd_truncation_study(const TruncationArgs& args, std::ostream& log) {
  if (args.p_list.empty()) throw ConfigError("truncation study needs p_list");
  if (args.samples_list.empty()) throw ConfigError("samples_list must be non-empty");

  TruncationResult res;
  std::ostringstream tail_os;
  tail_os << as_comments(echo_spec(args.spec))
          << "precision,samples,x_level,p_level,sigma_obtained,sigma_ideal,e_sigma,"
             "reliable\n";

  for (const std::uint64_t m : args.samples_list) {
    std::vector<double> ps;
    std::vector<double> rmses;
    for (const int p : args.p_list) {
      GrngSpec spec = args.spec;
      spec.precision = p;
      spec.validate();
      const SampleStream stream = generate(spec, m, args.seed, args.opts);
      const std::vector<double> xs = to_x(stream);
      const FitResult fm = fit_gaussian(xs, FitMethod::moments);
      const FitResult fc =
          fit_gaussian(xs, FitMethod::histogram_least_squares,
                       (0.0 - spec.mu) / spec.sigma, (1.0 - spec.mu) / spec.sigma);

      TruncationRow row;
      row.precision = p;
      row.samples = m;
      row.mu_fit = spec.mu + spec.sigma * fm.mu;
      row.sigma_fit = spec.sigma * fm.sigma;
      row.rmse = normalized_rmse(xs, fc);
      res.rows.push_back(row);
      ps.push_back(p);
      rmses.push_back(row.rmse);
      log << "p=" << p << " samples=" << m << " rmse=" << fmt(row.rmse) << "\n";

      for (const TailRow& t : tail_error(xs, args.tail_levels))
        tail_os << p << "," << m << "," << fmt(t.x_level) << "," << fmt(t.p_level)
                << "," << fmt(t.sigma_obtained) << "," << fmt(t.sigma_ideal) << ","
                << fmt(t.e_sigma) << "," << (t.reliable ? 1 : 0) << "\n";
    }
    if (!args.svg_path.empty() && ps.size() >= 2) {
      std::string path = args.svg_path;
      const auto dot = path.rfind('.');
      const std::string suffix = "_m" + std::to_string(m);
      if (dot == std::string::npos)
        path += suffix;
      else
        path.insert(dot, suffix);
      write_text_file(path, svg_xy(ps, rmses, "precision p", "normalized RMSE"));
    }
  }

  if (!args.table_csv.empty()) {
    std::ostringstream os;
    os << as_comments(echo_spec(args.spec)) << "# seed=" << args.seed
       << "\nprecision,samples,mu_fit,sigma_fit,rmse\n";
    for (const TruncationRow& r : res.rows)
      os << r.precision << "," << r.samples << "," << fmt(r.mu_fit) << ","
         << fmt(r.sigma_fit) << "," << fmt(r.rmse) << "\n";
    write_text_file(args.table_csv, os.str());
  }
  if (!args.tail_csv.empty()) write_text_file(args.tail_csv, tail_os.str());
  return res;
}

TailResult cmd_tail(const TailArgs& args, std::ostream& log) {
  if (args.combine_k < 1) throw ConfigError("combine_k must be >= 1");
  const auto k = static_cast<std::size_t>(args.combine_k);
  std::vector<std::uint64_t> seeds = args.seeds;
  if (seeds.empty())
    for (std::size_t j = 0; j < k; ++j) seeds.push_back(derive_seed(args.seed, j));
  if (seeds.size() != k)
    throw ConfigError("need exactly " + std::to_string(k) + " seeds, got " +
                      std::to_string(seeds.size()));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (seeds[a] == seeds[b])
        throw ConfigError("chain seeds must be distinct (seed " +
                          std::to_string(seeds[a]) + " repeats)");
  const std::uint64_t per_gen = args.samples_total / k;
  if (per_gen < 2)
    throw ConfigError("samples_total too small: fewer than 2 samples per chain");

  std::vector<std::vector<double>> xs;
  xs.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    const SampleStream stream = generate(args.spec, per_gen, seeds[j], args.opts);
    xs.push_back(to_x(stream));
  }
  const std::vector<double> combined = combine_streams(xs);

  TailResult res;
  res.combined = tail_error(combined, args.levels);
  for (const TailRow& r : res.combined)
    if (r.reliable)
      res.max_abs_e_sigma_reliable =
          std::max(res.max_abs_e_sigma_reliable, std::abs(r.e_sigma));

  for (const TailRow& r : res.combined)
    log << "level=" << fmt(r.x_level) << " e_sigma=" << fmt(r.e_sigma)
        << (r.reliable ? "" : " (unreliable)") << "\n";
  log << "combined " << k << " chains x " << per_gen
      << " samples; max |e_sigma| over reliable rows = "
      << fmt(res.max_abs_e_sigma_reliable) << "\n";

  if (!args.tail_csv.empty()) {
    std::ostringstream os;
    os << as_comments(echo_spec(args.spec)) << "# combine_k=" << args.combine_k
       << "\n# samples_per_chain=" << per_gen << "\n# seeds=";
    for (std::size_t j = 0; j < k; ++j) os << (j ? " " : "") << seeds[j];
    os << "\n" << tail_rows_csv(res.combined);
    write_text_file(args.tail_csv, os.str());
  }
  if (!args.svg_path.empty()) {
    std::vector<double> levels;
    std::vector<double> es;
    for (const TailRow& r : res.combined)
      if (r.reliable) {
        levels.push_back(r.x_level);
        es.push_back(r.e_sigma);
      }
    if (levels.size() >= 2)
      write_text_file(args.svg_path, svg_xy(levels, es, "deviate", "e_sigma"));
  }
  return res;
}

void cmd_inspect(const InspectArgs& args, std::ostream& out) {
  args.spec.validate();
  const CouplingSet c = build_couplings(args.spec);

  std::ostringstream os;
  os << describe_couplings(c);
  char buf[96];
  for (int i = 0; i < c.n_bits; ++i) {
    std::snprintf(buf, sizeof buf, "jA %d %a\n", i, c.jA[i]);
    os << buf;
  }
  for (int i = 0; i < c.n_bits; ++i) {
    std::snprintf(buf, sizeof buf, "jB %d %a\n", i, c.jB[i]);
    os << buf;
  }
  for (int i = 0; i < c.n_bits; ++i) {
    std::snprintf(buf, sizeof buf, "h %d %a kept=%d\n", i, c.h[i],
                  c.h_kept(i) ? 1 : 0);
    os << buf;
  }
  if (args.dense)
    for (int i = 0; i < c.n_bits; ++i)
      for (int j = i + 1; j < c.n_bits; ++j)
        if (c.j_kept(i, j)) {
          std::snprintf(buf, sizeof buf, "J %d %d %a\n", i, j, c.j_entry(i, j));
          os << buf;
        }

  out << os.str();
  if (!args.out_path.empty()) write_text_file(args.out_path, os.str());
}

AutocorrResult cmd_autocorr(const AutocorrArgs& args, std::ostream& log) {
  std::vector<double> xs;
  double dt = 1.0;
  AutocorrResult res;

  if (args.free_pbit) {
    const std::vector<std::int8_t> trace =
        free_pbit_trace(args.bias, args.tau_ps, args.steps, args.dt_ps, args.seed);
    xs.assign(trace.begin(), trace.end());
    dt = args.dt_ps;
    long double mean = 0.0L;
    for (const double v : xs) mean += v;
    res.trace_mean = static_cast<double>(mean / static_cast<long double>(xs.size()));
    log << "free p-bit: bias=" << fmt(args.bias) << " steps=" << args.steps
        << " mean=" << fmt(res.trace_mean) << " tanh(bias)=" << fmt(std::tanh(args.bias))
        << "\n";
  } else {
    if (args.input.empty())
      throw ConfigError("autocorr needs an input stream or the free p-bit mode");
    const SampleStream stream = load_stream(args.input, args.input_csv,
                                            args.csv_n_bits, args.csv_mu,
                                            args.csv_sigma);
    xs = to_x(stream);
    dt = stream.spec.mode == Mode::ct_autonomous ? stream.spec.spacing_ps : 1.0;
  }

  const int max_lag =
      std::min<int>(args.max_lag, static_cast<int>(xs.size()) - 1);
  res.acf = autocorrelation(xs, max_lag);
  res.guide = 3.0 / std::sqrt(static_cast<double>(xs.size()));
  if (args.fit_tau) {
    res.tau_fit = fitted_correlation_time(res.acf, dt);
    log << "fitted correlation time = " << fmt(*res.tau_fit)
        << (args.free_pbit || dt != 1.0 ? " ps" : " samples") << "\n";
  }
  double max_abs = 0.0;
  for (std::size_t l = 1; l < res.acf.size(); ++l)
    max_abs = std::max(max_abs, std::abs(res.acf[l]));
  log << "lags=" << max_lag << " max|A(lag>=1)|=" << fmt(max_abs)
      << " bound=" << fmt(res.guide) << "\n";

  if (!args.acf_csv.empty()) {
    std::ostringstream os;
    os << "lag,autocorr\n";
    for (std::size_t l = 0; l < res.acf.size(); ++l)
      os << l << "," << fmt(res.acf[l]) << "\n";
    write_text_file(args.acf_csv, os.str());
  }
  if (!args.svg_path.empty())
    write_text_file(args.svg_path, svg_stem(res.acf, res.guide, "autocorrelation"));
  return res;
}

}  // namespace pgrn

#include "pgrn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pgrn {

namespace {

constexpr double kInv_sqrt_2pi = 0.39894228040143268;

double gaussian_pdf(double x, double mu, double sigma) {
  const double z = (x - mu) / sigma;
  return kInv_sqrt_2pi / sigma * std::exp(-0.5 * z * z);
}

struct Moments {
  long double mean = 0.0L;
  long double var_unbiased = 0.0L;
  std::size_t n = 0;
};

Moments compute_moments(std::span<const double> xs) {
  if (xs.size() < 2)
    throw DegenerateDataError("need at least 2 samples, got " +
                              std::to_string(xs.size()));
  long double sum = 0.0L;
  for (const double v : xs) sum += v;
  const long double mean = sum / static_cast<long double>(xs.size());
  long double ss = 0.0L;
  for (const double v : xs) {
    const long double d = v - mean;
    ss += d * d;
  }
  return {mean, ss / static_cast<long double>(xs.size() - 1), xs.size()};
}

}  // namespace

std::vector<double> to_x(std::span<const std::uint64_t> gs, int n_bits, double mu,
                         double sigma) {
  if (n_bits < 1 || n_bits > 64) throw ConfigError("n_bits must be in [1, 64]");
  if (!(sigma > 0.0)) throw ConfigError("sigma must be > 0");
  const double g0d = std::ldexp(1.0, n_bits) - 1.0;
  std::vector<double> xs;
  xs.reserve(gs.size());
  for (const std::uint64_t g : gs)
    xs.push_back((static_cast<double>(g) / g0d - mu) / sigma);
  return xs;
}

std::vector<double> to_x(const SampleStream& stream) {
  return to_x(stream.values, stream.spec.n_bits, stream.spec.mu, stream.spec.sigma);
}

FitMethod parse_fit_method(const std::string& name) {
  if (name == "moments") return FitMethod::moments;
  if (name == "histogram_least_squares" || name == "curve")
    return FitMethod::histogram_least_squares;
  throw ConfigError("unknown fit method: " + name);
}

double Histogram::density(int k) const {
  if (total == 0) return 0.0;
  return static_cast<double>(counts[static_cast<std::size_t>(k)]) /
         (static_cast<double>(total) * bin_width());
}

Histogram make_histogram(std::span<const double> xs, double lo, double hi, int bins) {
  if (!(hi > lo)) throw ConfigError("histogram range must be non-empty");
  if (bins < 1) throw ConfigError("histogram needs at least 1 bin");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  h.total = xs.size();
  const double inv_w = bins / (hi - lo);
  for (const double v : xs) {
    if (v < lo || v >= hi) continue;
    auto k = static_cast<std::size_t>((v - lo) * inv_w);
    if (k >= h.counts.size()) k = h.counts.size() - 1;
    ++h.counts[k];
    ++h.in_range;
  }
  return h;
}

/// Damped Gauss-Newton fit of a Gaussian pdf to binned density values.
FitResult fit_curve_to_histogram(const Histogram& hist, double mu0, double sigma0) {
  const int k_bins = hist.bins();
  std::vector<double> centers(static_cast<std::size_t>(k_bins));
  std::vector<double> dens(static_cast<std::size_t>(k_bins));
  for (int k = 0; k < k_bins; ++k) {
    centers[static_cast<std::size_t>(k)] = hist.center(k);
    dens[static_cast<std::size_t>(k)] = hist.density(k);
  }

  const auto sse = [&](double mu, double sigma) {
    long double acc = 0.0L;
    for (int k = 0; k < k_bins; ++k) {
      const long double r =
          dens[static_cast<std::size_t>(k)] -
          gaussian_pdf(centers[static_cast<std::size_t>(k)], mu, sigma);
      acc += r * r;
    }
    return static_cast<double>(acc);
  };

  double mu = mu0;
  double sigma = sigma0;
  double best = sse(mu, sigma);
  double lambda = 1e-3;
  int iterations = 0;

  for (int it = 0; it < 100; ++it) {
    ++iterations;
    double jtj00 = 0.0, jtj01 = 0.0, jtj11 = 0.0, jtr0 = 0.0, jtr1 = 0.0;
    for (int k = 0; k < k_bins; ++k) {
      const double c = centers[static_cast<std::size_t>(k)];
      const double g = gaussian_pdf(c, mu, sigma);
      const double z = (c - mu) / sigma;
      const double d_mu = g * z / sigma;
      const double d_sigma = g * (z * z - 1.0) / sigma;
      const double r = dens[static_cast<std::size_t>(k)] - g;
      jtj00 += d_mu * d_mu;
      jtj01 += d_mu * d_sigma;
      jtj11 += d_sigma * d_sigma;
      jtr0 += d_mu * r;
      jtr1 += d_sigma * r;
    }

    bool stepped = false;
    for (int attempt = 0; attempt < 12 && !stepped; ++attempt) {
      const double a00 = jtj00 * (1.0 + lambda);
      const double a11 = jtj11 * (1.0 + lambda);
      const double det = a00 * a11 - jtj01 * jtj01;
      if (det == 0.0 || !std::isfinite(det)) break;
      const double d_mu_step = (a11 * jtr0 - jtj01 * jtr1) / det;
      const double d_sigma_step = (a00 * jtr1 - jtj01 * jtr0) / det;
      const double mu_try = mu + d_mu_step;
      double sigma_try = sigma + d_sigma_step;
      if (!(sigma_try > 0.0)) sigma_try = sigma * 0.5;
      const double sse_try = sse(mu_try, sigma_try);
      if (sse_try <= best) {
        const bool converged = std::abs(mu_try - mu) < 1e-12 * sigma &&
                               std::abs(sigma_try - sigma) < 1e-12 * sigma;
        mu = mu_try;
        sigma = sigma_try;
        best = sse_try;
        lambda = std::max(lambda * 0.25, 1e-12);
        stepped = true;
        if (converged) it = 100;
      } else {
        lambda *= 8.0;
      }
    }
    if (!stepped) break;
  }

  FitResult r;
  r.mu = mu;
  r.sigma = sigma;
  r.method = FitMethod::histogram_least_squares;
  r.iterations = iterations;
  return r;
}

FitResult fit_gaussian(std::span<const double> xs, FitMethod method,
                       double support_lo, double support_hi) {
  if (!(support_lo < support_hi))
    throw ConfigError("fit support interval is empty");
  const Moments m = compute_moments(xs);
  if (!(m.var_unbiased > 0.0L))
    throw DegenerateDataError("constant input; cannot fit a width");
  FitResult moments;
  moments.mu = static_cast<double>(m.mean);
  moments.sigma = static_cast<double>(std::sqrt(m.var_unbiased));
  moments.method = FitMethod::moments;
  if (method == FitMethod::moments) return moments;

  // Bins outside the generator's support are structurally empty, so a
  // range-limited generator would otherwise drag the width estimate down.
  const double lo = std::max(moments.mu - 5.0 * moments.sigma, support_lo);
  const double hi = std::min(moments.mu + 5.0 * moments.sigma, support_hi);
  if (!(lo < hi)) throw DegenerateDataError("data lies outside the fit support");
  const Histogram hist = make_histogram(xs, lo, hi, kAnalysisBins);
  return fit_curve_to_histogram(hist, moments.mu, moments.sigma);
}

FitResult fit_gaussian_weighted(std::span<const double> xs,
                                std::span<const double> weights) {
  if (xs.size() != weights.size())
    throw ShapeError("values and weights differ in length");
  if (xs.empty()) throw DegenerateDataError("empty weighted input");
  long double wsum = 0.0L;
  long double mean_acc = 0.0L;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (weights[i] < 0.0) throw ConfigError("weights must be non-negative");
    wsum += weights[i];
    mean_acc += static_cast<long double>(weights[i]) * xs[i];
  }
  if (!(wsum > 0.0L)) throw DegenerateDataError("weights sum to zero");
  const long double mean = mean_acc / wsum;
  long double ss = 0.0L;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const long double d = xs[i] - mean;
    ss += static_cast<long double>(weights[i]) * d * d;
  }
  const long double var = ss / wsum;
  if (!(var > 0.0L)) throw DegenerateDataError("weighted input has zero variance");
  FitResult r;
  r.mu = static_cast<double>(mean);
  r.sigma = static_cast<double>(std::sqrt(var));
  r.method = FitMethod::moments;
  return r;
}

double normalized_rmse(const Histogram& hist, const FitResult& fit) {
  if (hist.total == 0) throw DegenerateDataError("no samples to bin");
  long double acc = 0.0L;
  for (int k = 0; k < hist.bins(); ++k) {
    const long double r = hist.density(k) - gaussian_pdf(hist.center(k), fit.mu, fit.sigma);
    acc += r * r;
  }
  const double rmse = std::sqrt(static_cast<double>(acc / hist.bins()));
  const double peak = kInv_sqrt_2pi / fit.sigma;
  return rmse / peak;
}

double normalized_rmse(std::span<const double> xs, const FitResult& fit) {
  if (xs.empty()) throw DegenerateDataError("no samples");
  const Histogram hist = make_histogram(xs, fit.mu - 5.0 * fit.sigma,
                                        fit.mu + 5.0 * fit.sigma, kAnalysisBins);
  return normalized_rmse(hist, fit);
}

std::vector<double> autocorrelation(std::span<const double> xs, int max_lag) {
  const auto m = static_cast<std::int64_t>(xs.size());
  if (max_lag < 0 || max_lag >= m)
    throw ShapeError("max_lag must be in [0, len), got " + std::to_string(max_lag) +
                     " for length " + std::to_string(m));
  const Moments mom = compute_moments(xs);
  long double denom_ld = 0.0L;
  const auto mean = static_cast<double>(mom.mean);
  for (const double v : xs) {
    const long double d = v - mean;
    denom_ld += d * d;
  }
  if (!(denom_ld > 0.0L)) throw DegenerateDataError("constant series");
  const auto denom = static_cast<double>(denom_ld);

  std::vector<double> acf(static_cast<std::size_t>(max_lag) + 1);
  acf[0] = 1.0;
  for (int lag = 1; lag <= max_lag; ++lag) {
    double num = 0.0;
    const std::int64_t last = m - lag;
    for (std::int64_t t = 0; t < last; ++t)
      num += (xs[static_cast<std::size_t>(t)] - mean) *
             (xs[static_cast<std::size_t>(t + lag)] - mean);
    acf[static_cast<std::size_t>(lag)] = num / denom;
  }
  return acf;
}

double fitted_correlation_time(std::span<const double> acf, double dt) {
  if (!(dt > 0.0)) throw ConfigError("dt must be > 0");
  std::vector<double> lags;
  std::vector<double> logs;
  for (std::size_t l = 1; l < acf.size(); ++l) {
    if (!(acf[l] > 0.05)) break;
    lags.push_back(static_cast<double>(l));
    logs.push_back(std::log(acf[l]));
  }
  if (lags.size() < 3)
    throw DegenerateDataError("need at least 3 lags above 0.05 to fit a decay time");
  long double sl = 0.0L, sy = 0.0L, sll = 0.0L, sly = 0.0L;
  for (std::size_t i = 0; i < lags.size(); ++i) {
    sl += lags[i];
    sy += logs[i];
    sll += static_cast<long double>(lags[i]) * lags[i];
    sly += static_cast<long double>(lags[i]) * logs[i];
  }
  const auto n = static_cast<long double>(lags.size());
  const long double slope = (n * sly - sl * sy) / (n * sll - sl * sl);
  if (!(slope < 0.0L)) throw DegenerateDataError("autocorrelation does not decay");
  return static_cast<double>(-dt / slope);
}

TailRow tail_row(double center, double p_normalized) {
  TailRow row;
  row.sigma_obtained = std::abs(center);
  row.p_level = p_normalized;
  if (p_normalized > 0.0) {
    row.sigma_ideal = std::sqrt(2.0 * std::log(1.0 / p_normalized));
    row.e_sigma = row.sigma_obtained - row.sigma_ideal;
  } else {
    row.sigma_ideal = std::numeric_limits<double>::infinity();
    row.e_sigma = -std::numeric_limits<double>::infinity();
  }
  return row;
}

std::vector<TailRow> tail_error(const Histogram& hist, std::span<const double> levels) {
  if (hist.in_range == 0) throw DegenerateDataError("no samples in tail histogram");
  const std::uint64_t peak = *std::max_element(hist.counts.begin(), hist.counts.end());
  const double w = hist.bin_width();

  std::vector<TailRow> rows;
  for (const double level : levels) {
    if (!(level >= 0.0)) throw ConfigError("tail levels must be >= 0");
    for (const double signed_level : {level, -level}) {
      auto k = static_cast<std::int64_t>((signed_level - hist.lo) / w);
      k = std::clamp<std::int64_t>(k, 0, hist.bins() - 1);
      const double center = hist.center(static_cast<int>(k));
      const std::uint64_t count = hist.counts[static_cast<std::size_t>(k)];
      TailRow row = tail_row(center, static_cast<double>(count) / static_cast<double>(peak));
      row.x_level = signed_level;
      const double expected = static_cast<double>(hist.total) * w *
                              kInv_sqrt_2pi * std::exp(-0.5 * center * center);
      row.reliable = count > 0 && expected >= 10.0;
      rows.push_back(row);
      if (level == 0.0) break;
    }
  }
  return rows;
}

std::vector<TailRow> tail_error(std::span<const double> xs,
                                std::span<const double> levels) {
  if (xs.empty()) throw DegenerateDataError("no samples");
  return tail_error(make_histogram(xs, -5.0, 5.0, kAnalysisBins), levels);
}

std::vector<double> combine_streams(const std::vector<std::vector<double>>& xs) {
  if (xs.empty()) throw ShapeError("need at least one stream to combine");
  const std::size_t m = xs.front().size();
  for (const auto& s : xs)
    if (s.size() != m)
      throw ShapeError("streams differ in length: " + std::to_string(m) + " vs " +
                       std::to_string(s.size()));
  const double scale = 1.0 / std::sqrt(static_cast<double>(xs.size()));
  std::vector<double> out(m, 0.0);
  for (const auto& s : xs)
    for (std::size_t t = 0; t < m; ++t) out[t] += s[t];
  for (auto& v : out) v *= scale;
  return out;
}

double independence_scatter(std::span<const double> xs) {
  if (xs.size() < 2) throw DegenerateDataError("need at least 2 samples");
  const std::size_t pairs = xs.size() - 1;
  long double sa = 0.0L, sb = 0.0L, saa = 0.0L, sbb = 0.0L, sab = 0.0L;
  for (std::size_t t = 0; t < pairs; ++t) {
    const long double a = xs[t];
    const long double b = xs[t + 1];
    sa += a;
    sb += b;
    saa += a * a;
    sbb += b * b;
    sab += a * b;
  }
  const auto n = static_cast<long double>(pairs);
  const long double cov = n * sab - sa * sb;
  const long double va = n * saa - sa * sa;
  const long double vb = n * sbb - sb * sb;
  if (!(va > 0.0L) || !(vb > 0.0L))
    throw DegenerateDataError("adjacent-pair variance is zero");
  return static_cast<double>(cov / std::sqrt(va * vb));
}

namespace {

constexpr double kGammaEps = 1e-15;
constexpr int kGammaMaxIter = 1000;
constexpr double kFpMin = 1e-300;

/// Series expansion of P(a, x); converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < kGammaMaxIter; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * kGammaEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

/// Lentz continued fraction for Q(a, x); converges fast for x >= a + 1.
double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kGammaMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = b + an / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kGammaEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0)
    throw ConfigError("gamma_p requires a > 0 and x >= 0");
  if (x == 0.0) return 0.0;
  return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0)
    throw ConfigError("gamma_q requires a > 0 and x >= 0");
  if (x == 0.0) return 1.0;
  return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi_squared_sf(double stat, int dof) {
  if (dof < 1) throw ConfigError("dof must be >= 1");
  if (!(stat >= 0.0)) throw ConfigError("statistic must be >= 0");
  return gamma_q(0.5 * dof, 0.5 * stat);
}

Chi2Report chi_squared_gof(std::span<const std::uint64_t> counts,
                           std::span<const double> pmf, double min_expected) {
  if (counts.size() != pmf.size())
    throw ShapeError("counts and pmf differ in support size");
  if (counts.empty()) throw DegenerateDataError("empty support");
  long double total_ld = 0.0L;
  for (const auto c : counts) total_ld += c;
  const auto total = static_cast<double>(total_ld);
  if (!(total > 0.0)) throw DegenerateDataError("no observations");

  std::vector<double> obs_pooled;
  std::vector<double> exp_pooled;
  double obs_acc = 0.0;
  double exp_acc = 0.0;
  for (std::size_t g = 0; g < counts.size(); ++g) {
    obs_acc += static_cast<double>(counts[g]);
    exp_acc += total * pmf[g];
    if (exp_acc >= min_expected) {
      obs_pooled.push_back(obs_acc);
      exp_pooled.push_back(exp_acc);
      obs_acc = 0.0;
      exp_acc = 0.0;
    }
  }
  if (exp_acc > 0.0 || obs_acc > 0.0) {
    if (obs_pooled.empty())
      throw DegenerateDataError("expected counts too small to pool");
    obs_pooled.back() += obs_acc;
    exp_pooled.back() += exp_acc;
  }
  if (obs_pooled.size() < 2)
    throw DegenerateDataError("fewer than 2 pooled bins; increase sample size");

  long double stat = 0.0L;
  for (std::size_t k = 0; k < obs_pooled.size(); ++k) {
    const long double d = obs_pooled[k] - exp_pooled[k];
    stat += d * d / exp_pooled[k];
  }

  Chi2Report r;
  r.statistic = static_cast<double>(stat);
  r.pooled_bins = static_cast<int>(obs_pooled.size());
  r.dof = r.pooled_bins - 1;
  r.p_value = chi_squared_sf(r.statistic, r.dof);
  return r;
}

AnalysisReport analyze_xs(std::span<const double> xs, double mu_desired,
                          double sigma_desired, const AnalyzeOptions& opts) {
  AnalysisReport rep;
  rep.m_samples = xs.size();
  rep.mu_desired = mu_desired;
  rep.sigma_desired = sigma_desired;

  const FitResult fit_m = fit_gaussian(xs, FitMethod::moments);
  // X values live in [(0 - mu)/sigma, (1 - mu)/sigma]; the readout cannot
  // leave [0, G0].
  const FitResult fit_c =
      fit_gaussian(xs, FitMethod::histogram_least_squares,
                   (0.0 - mu_desired) / sigma_desired,
                   (1.0 - mu_desired) / sigma_desired);
  rep.mu_fit = mu_desired + sigma_desired * fit_m.mu;
  rep.sigma_fit = sigma_desired * fit_m.sigma;
  rep.mu_fit_curve = mu_desired + sigma_desired * fit_c.mu;
  rep.sigma_fit_curve = sigma_desired * fit_c.sigma;
  rep.rmse_normalized = normalized_rmse(xs, fit_c);

  const int max_lag = std::min<int>(opts.max_lag, static_cast<int>(xs.size()) - 1);
  rep.lag_autocorr = autocorrelation(xs, max_lag);
  rep.lag1_scatter_corr = independence_scatter(xs);
  rep.histogram = make_histogram(xs, -5.0, 5.0, kAnalysisBins);
  rep.tail_table = tail_error(rep.histogram, opts.tail_levels);
  return rep;
}

AnalysisReport analyze_stream(const SampleStream& stream, const AnalyzeOptions& opts) {
  const std::vector<double> xs = to_x(stream);
  AnalysisReport rep = analyze_xs(xs, stream.spec.mu, stream.spec.sigma, opts);
  rep.spec = stream.spec;
  rep.seed = stream.seed;
  return rep;
}

}  // namespace pgrn

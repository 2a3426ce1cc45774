#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "pgrn/sampler.hpp"
#include "pgrn/spec.hpp"

namespace pgrn {

/// Standardized value X = ((G / G0) - mu) / sigma per sample.
std::vector<double> to_x(std::span<const std::uint64_t> gs, int n_bits, double mu,
                         double sigma);
std::vector<double> to_x(const SampleStream& stream);

enum class FitMethod {
  moments,                   // sample mean + unbiased standard deviation
  histogram_least_squares,   // Gauss-Newton pdf fit on a 101-bin histogram
};

FitMethod parse_fit_method(const std::string& name);

struct FitResult {
  double mu = 0.0;
  double sigma = 0.0;
  FitMethod method = FitMethod::moments;
  int iterations = 0;  // curve fit only
};

/// Fits a Gaussian in the units of the input values. The curve fit starts
/// from the moment estimates and minimizes squared density error over 101
/// bins spanning mu +- 5 sigma, clipped to [support_lo, support_hi]; pass the
/// generator's readout range so structurally empty bins do not bias the
/// width estimate.
FitResult fit_gaussian(std::span<const double> xs,
                       FitMethod method = FitMethod::moments,
                       double support_lo = -std::numeric_limits<double>::infinity(),
                       double support_hi = std::numeric_limits<double>::infinity());

/// Moment fit of a weighted point mass distribution (weights need not be
/// normalized). Used to fit exact pmfs.
FitResult fit_gaussian_weighted(std::span<const double> xs,
                                std::span<const double> weights);

struct Histogram;

/// Damped Gauss-Newton fit of a Gaussian pdf to binned density values,
/// starting from (mu0, sigma0).
FitResult fit_curve_to_histogram(const Histogram& hist, double mu0, double sigma0);

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;        // includes out-of-range samples
  std::uint64_t in_range = 0;

  int bins() const { return static_cast<int>(counts.size()); }
  double bin_width() const { return (hi - lo) / bins(); }
  double center(int k) const { return lo + (k + 0.5) * bin_width(); }
  /// Empirical probability density at bin k, normalized by total samples.
  double density(int k) const;
};

Histogram make_histogram(std::span<const double> xs, double lo, double hi, int bins);

inline constexpr int kAnalysisBins = 101;

/// RMS difference between the empirical density and the fitted pdf over 101
/// bins spanning fit.mu +- 5 fit.sigma, divided by the fitted pdf peak.
double normalized_rmse(std::span<const double> xs, const FitResult& fit);
double normalized_rmse(const Histogram& hist, const FitResult& fit);

/// A(dt) = sum_{t=0}^{T-dt} (x_t - xbar)(x_{t+dt} - xbar) / sum_{t=0}^{T} (x_t - xbar)^2
/// for dt = 0..max_lag. A(0) = 1 whenever the series is not constant.
std::vector<double> autocorrelation(std::span<const double> xs, int max_lag);

/// Correlation time from a log-linear fit of acf values at lags >= 1 down to
/// the first value below 0.05. dt is the time per lag step.
double fitted_correlation_time(std::span<const double> acf, double dt);

struct TailRow {
  double x_level = 0.0;        // requested deviate (signed)
  double p_level = 0.0;        // peak-normalized histogram height
  double sigma_obtained = 0.0; // |bin center|
  double sigma_ideal = 0.0;    // sqrt(2 ln(1/p_level))
  double e_sigma = 0.0;        // sigma_obtained - sigma_ideal
  bool reliable = false;       // expected count >= 10 and bin non-empty
};

/// One row from a peak-normalized histogram height at a given bin center.
TailRow tail_row(double center, double p_normalized);

/// Tail table for standardized samples: 101-bin histogram over [-5, 5],
/// peak-normalized; one row per requested level and tail side.
std::vector<TailRow> tail_error(std::span<const double> xs,
                                std::span<const double> levels);
std::vector<TailRow> tail_error(const Histogram& hist,
                                std::span<const double> levels);

/// Element-wise (sum_j xs[j][t]) / sqrt(k); preserves mean 0, variance 1 for
/// iid standard inputs.
std::vector<double> combine_streams(const std::vector<std::vector<double>>& xs);

/// Pearson correlation of adjacent pairs (x_t, x_{t+1}).
double independence_scatter(std::span<const double> xs);

/// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// Survival function of the chi-squared distribution: Q(dof/2, stat/2).
double chi_squared_sf(double stat, int dof);

struct Chi2Report {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
  int pooled_bins = 0;  // bins after pooling low-expectation cells
};

/// Goodness of fit of observed counts against an expected pmf on the same
/// support. Adjacent cells are pooled until each expected count reaches
/// min_expected.
Chi2Report chi_squared_gof(std::span<const std::uint64_t> counts,
                           std::span<const double> pmf, double min_expected = 5.0);

struct AnalysisReport {
  std::uint64_t m_samples = 0;
  double mu_desired = 0.0;
  double sigma_desired = 0.0;
  double mu_fit = 0.0;          // default (moment) fit, G/G0 units
  double sigma_fit = 0.0;
  double mu_fit_curve = 0.0;    // histogram-least-squares fit, G/G0 units
  double sigma_fit_curve = 0.0;
  double rmse_normalized = 0.0; // against the curve fit
  std::vector<double> lag_autocorr;
  double lag1_scatter_corr = 0.0;
  std::vector<TailRow> tail_table;
  Histogram histogram;          // standardized, 101 bins over [-5, 5]
  GrngSpec spec;
  std::uint64_t seed = 0;
};

struct AnalyzeOptions {
  int max_lag = 100;
  std::vector<double> tail_levels = {1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};
};

AnalysisReport analyze_xs(std::span<const double> xs, double mu_desired,
                          double sigma_desired, const AnalyzeOptions& opts = {});
AnalysisReport analyze_stream(const SampleStream& stream,
                              const AnalyzeOptions& opts = {});

}  // namespace pgrn

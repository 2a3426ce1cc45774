#pragma once

#include <span>
#include <string>

#include "pgrn/stats.hpp"

namespace pgrn {

/// Standalone SVG: histogram density bars with the fitted pdf overlaid.
std::string svg_histogram(const Histogram& hist, const FitResult& fit);

/// Standalone SVG: stem plot of per-lag values with dashed +-guide lines
/// (guide <= 0 disables them).
std::string svg_stem(std::span<const double> values, double guide,
                     const std::string& y_label);

/// Standalone SVG: polyline with point markers.
std::string svg_xy(std::span<const double> xs, std::span<const double> ys,
                   const std::string& x_label, const std::string& y_label);

/// Terminal fallback: vertical bar chart of the histogram, peak-normalized.
std::string ascii_histogram(const Histogram& hist, int rows = 16);

}  // namespace pgrn

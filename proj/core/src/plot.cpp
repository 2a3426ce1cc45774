#include "pgrn/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pgrn {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 400;
constexpr int kMargin = 48;

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Frame {
  double x_lo, x_hi, y_lo, y_hi;
  double px(double x) const {
    return kMargin + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin);
  }
  double py(double y) const {
    return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin);
  }
};

void open_svg(std::ostringstream& os) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
     << kHeight << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void axes(std::ostringstream& os, const Frame& f, const std::string& x_label,
          const std::string& y_label) {
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\""
     << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin
     << "\" stroke=\"black\"/>\n"
     << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
     << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n"
     << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 16
     << "\" font-size=\"11\">" << num(f.x_lo) << "</text>\n"
     << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 16
     << "\" font-size=\"11\" text-anchor=\"end\">" << num(f.x_hi) << "</text>\n"
     << "<text x=\"" << kMargin - 4 << "\" y=\"" << kHeight - kMargin
     << "\" font-size=\"11\" text-anchor=\"end\">" << num(f.y_lo) << "</text>\n"
     << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin + 4
     << "\" font-size=\"11\" text-anchor=\"end\">" << num(f.y_hi) << "</text>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 8
     << "\" font-size=\"12\" text-anchor=\"middle\">" << x_label << "</text>\n"
     << "<text x=\"14\" y=\"" << kHeight / 2
     << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
     << kHeight / 2 << ")\">" << y_label << "</text>\n";
}

}  // namespace

std::string svg_histogram(const Histogram& hist, const FitResult& fit) {
  double peak = 0.39894228040143268 / fit.sigma;
  for (int k = 0; k < hist.bins(); ++k) peak = std::max(peak, hist.density(k));
  const Frame f{hist.lo, hist.hi, 0.0, peak * 1.05};

  std::ostringstream os;
  open_svg(os);
  const double w = hist.bin_width();
  for (int k = 0; k < hist.bins(); ++k) {
    const double d = hist.density(k);
    if (d <= 0.0) continue;
    const double x0 = f.px(hist.lo + k * w);
    const double x1 = f.px(hist.lo + (k + 1) * w);
    const double y = f.py(d);
    os << "<rect x=\"" << num(x0) << "\" y=\"" << num(y) << "\" width=\""
       << num(x1 - x0) << "\" height=\"" << num(f.py(0.0) - y)
       << "\" fill=\"#7aa6d6\"/>\n";
  }
  os << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" points=\"";
  for (int i = 0; i <= 200; ++i) {
    const double x = hist.lo + (hist.hi - hist.lo) * i / 200.0;
    const double z = (x - fit.mu) / fit.sigma;
    const double y = 0.39894228040143268 / fit.sigma * std::exp(-0.5 * z * z);
    os << num(f.px(x)) << "," << num(f.py(y)) << " ";
  }
  os << "\"/>\n";
  axes(os, f, "X", "density");
  os << "</svg>\n";
  return os.str();
}

std::string svg_stem(std::span<const double> values, double guide,
                     const std::string& y_label) {
  double lo = 0.0;
  double hi = 0.0;
  for (const double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (guide > 0.0) {
    lo = std::min(lo, -1.5 * guide);
    hi = std::max(hi, 1.5 * guide);
  }
  if (hi == lo) hi = lo + 1.0;
  const Frame f{0.0, static_cast<double>(values.empty() ? 1 : values.size() - 1),
                lo, hi};

  std::ostringstream os;
  open_svg(os);
  os << "<line x1=\"" << num(f.px(f.x_lo)) << "\" y1=\"" << num(f.py(0.0))
     << "\" x2=\"" << num(f.px(f.x_hi)) << "\" y2=\"" << num(f.py(0.0))
     << "\" stroke=\"#888\"/>\n";
  if (guide > 0.0)
    for (const double g : {guide, -guide})
      os << "<line x1=\"" << num(f.px(f.x_lo)) << "\" y1=\"" << num(f.py(g))
         << "\" x2=\"" << num(f.px(f.x_hi)) << "\" y2=\"" << num(f.py(g))
         << "\" stroke=\"#c0392b\" stroke-dasharray=\"4 3\"/>\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = f.px(static_cast<double>(i));
    os << "<line x1=\"" << num(x) << "\" y1=\"" << num(f.py(0.0)) << "\" x2=\""
       << num(x) << "\" y2=\"" << num(f.py(values[i]))
       << "\" stroke=\"#2c3e50\"/>\n"
       << "<circle cx=\"" << num(x) << "\" cy=\"" << num(f.py(values[i]))
       << "\" r=\"1.5\" fill=\"#2c3e50\"/>\n";
  }
  axes(os, f, "lag", y_label);
  os << "</svg>\n";
  return os.str();
}

std::string svg_xy(std::span<const double> xs, std::span<const double> ys,
                   const std::string& x_label, const std::string& y_label) {
  if (xs.size() != ys.size() || xs.empty()) throw ShapeError("svg_xy needs matching non-empty x/y");
  double x_lo = xs[0], x_hi = xs[0], y_lo = ys[0], y_hi = ys[0];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    x_lo = std::min(x_lo, xs[i]);
    x_hi = std::max(x_hi, xs[i]);
    y_lo = std::min(y_lo, ys[i]);
    y_hi = std::max(y_hi, ys[i]);
  }
  if (x_hi == x_lo) x_hi = x_lo + 1.0;
  if (y_hi == y_lo) y_hi = y_lo + 1.0;
  const double pad = 0.05 * (y_hi - y_lo);
  const Frame f{x_lo, x_hi, y_lo - pad, y_hi + pad};

  std::ostringstream os;
  open_svg(os);
  os << "<polyline fill=\"none\" stroke=\"#2c3e50\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << num(f.px(xs[i])) << "," << num(f.py(ys[i])) << " ";
  os << "\"/>\n";
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << "<circle cx=\"" << num(f.px(xs[i])) << "\" cy=\"" << num(f.py(ys[i]))
       << "\" r=\"2.5\" fill=\"#c0392b\"/>\n";
  axes(os, f, x_label, y_label);
  os << "</svg>\n";
  return os.str();
}

std::string ascii_histogram(const Histogram& hist, int rows) {
  if (rows < 1) throw ConfigError("rows must be >= 1");
  std::uint64_t peak = 0;
  for (const auto c : hist.counts) peak = std::max(peak, c);
  if (peak == 0) return "(empty histogram)\n";

  std::ostringstream os;
  for (int r = rows; r >= 1; --r) {
    for (const auto c : hist.counts) {
      const double h = static_cast<double>(c) / static_cast<double>(peak) * rows;
      os << (h >= r - 0.5 ? '#' : ' ');
    }
    os << "\n";
  }
  for (std::size_t k = 0; k < hist.counts.size(); ++k) os << '-';
  os << "\n" << num(hist.lo);
  const std::string hi = num(hist.hi);
  const std::size_t used = num(hist.lo).size();
  if (hist.counts.size() > used + hi.size())
    os << std::string(hist.counts.size() - used - hi.size(), ' ');
  else
    os << ' ';
  os << hi << "\n";
  return os.str();
}

}  // namespace pgrn

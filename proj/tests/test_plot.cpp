#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "pgrn/commands.hpp"
#include "pgrn/errors.hpp"
#include "pgrn/plot.hpp"
#include "pgrn/stats.hpp"

using namespace pgrn;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

struct FileGuard {
  std::string path;
  explicit FileGuard(std::string p) : path(std::move(p)) {}
  ~FileGuard() { std::remove(path.c_str()); }
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::size_t count_of(const std::string& doc, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = doc.find(needle); pos != std::string::npos;
       pos = doc.find(needle, pos + needle.size()))
    ++n;
  return n;
}

bool well_formed(const std::string& doc) {
  return doc.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\" "
                         "width=\"640\" height=\"400\"") &&
         doc.ends_with("</svg>\n") &&
         count_of(doc, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>") == 1;
}

Histogram three_bins() {
  Histogram h;
  h.lo = 0.0;
  h.hi = 3.0;
  h.counts = {1, 2, 4};
  h.total = 7;
  h.in_range = 7;
  return h;
}

}  // namespace

TEST_SUITE("plot") {

TEST_CASE("histogram svg draws one bar per occupied bin plus the fitted curve") {
  Histogram h;
  h.lo = -2.0;
  h.hi = 2.0;
  h.counts = {0, 5, 3, 0};
  h.total = 8;
  h.in_range = 8;
  FitResult fit;
  fit.mu = 0.0;
  fit.sigma = 1.0;

  const std::string doc = svg_histogram(h, fit);
  CHECK(well_formed(doc));
  CHECK(count_of(doc, "fill=\"#7aa6d6\"") == 2);  // empty bins are skipped
  CHECK(count_of(doc, "<polyline") == 1);
  CHECK(count_of(doc, ",") == 201);  // curve sampled at 201 points
  CHECK(doc.find(">X</text>") != std::string::npos);
  CHECK(doc.find(">density</text>") != std::string::npos);
}

TEST_CASE("stem svg marks the guide band only when one is given") {
  const std::vector<double> values = {1.0, -0.5, 0.25};

  const std::string with_guide = svg_stem(values, 0.1, "autocorrelation");
  CHECK(well_formed(with_guide));
  CHECK(count_of(with_guide, "stroke-dasharray") == 2);  // +guide and -guide
  CHECK(count_of(with_guide, "<circle") == values.size());
  CHECK(with_guide.find(">autocorrelation</text>") != std::string::npos);
  CHECK(with_guide.find(">lag</text>") != std::string::npos);

  const std::string no_guide = svg_stem(values, 0.0, "autocorrelation");
  CHECK(well_formed(no_guide));
  CHECK(count_of(no_guide, "stroke-dasharray") == 0);
}

TEST_CASE("stem svg stays well formed on degenerate inputs") {
  const std::string empty = svg_stem({}, 0.05, "acf");
  CHECK(well_formed(empty));
  CHECK(count_of(empty, "<circle") == 0);

  const std::vector<double> flat = {0.0, 0.0};
  const std::string doc = svg_stem(flat, 0.0, "acf");
  CHECK(well_formed(doc));
  CHECK(doc.find("nan") == std::string::npos);
  CHECK(doc.find("inf") == std::string::npos);
}

TEST_CASE("xy svg joins the points and rejects bad shapes") {
  const std::vector<double> xs = {0.0, 1.0, 2.0};
  const std::vector<double> ys = {5.0, 3.0, 4.0};

  const std::string doc = svg_xy(xs, ys, "precision p", "normalized RMSE");
  CHECK(well_formed(doc));
  CHECK(count_of(doc, "<polyline") == 1);
  CHECK(count_of(doc, "<circle") == xs.size());
  CHECK(doc.find(">precision p</text>") != std::string::npos);
  CHECK(doc.find(">normalized RMSE</text>") != std::string::npos);

  const std::vector<double> short_ys = {5.0, 3.0};
  CHECK_THROWS_AS(svg_xy(xs, short_ys, "x", "y"), ShapeError);
  CHECK_THROWS_AS(svg_xy({}, {}, "x", "y"), ShapeError);
}

TEST_CASE("xy svg handles constant coordinates without dividing by zero") {
  const std::vector<double> xs = {1.0, 1.0, 1.0};
  const std::vector<double> ys = {2.0, 2.0, 2.0};
  const std::string doc = svg_xy(xs, ys, "x", "y");
  CHECK(well_formed(doc));
  CHECK(doc.find("nan") == std::string::npos);
  CHECK(doc.find("inf") == std::string::npos);
}

TEST_CASE("ascii histogram scales bars to the peak count") {
  CHECK(ascii_histogram(three_bins(), 4) ==
        "  #\n"
        "  #\n"
        " ##\n"
        "###\n"
        "---\n"
        "0 3\n");
}

TEST_CASE("ascii histogram rejects bad row counts and empty data") {
  CHECK_THROWS_AS(ascii_histogram(three_bins(), 0), ConfigError);

  Histogram empty;
  empty.lo = 0.0;
  empty.hi = 1.0;
  empty.counts = {0, 0};
  CHECK(ascii_histogram(empty, 4) == "(empty histogram)\n");
}

TEST_CASE("analyze writes svg artifacts when given a prefix") {
  const std::string stream_path = temp_path("pgrn_plot_an.pgrn");
  const std::string prefix = temp_path("pgrn_plot_an");
  const FileGuard g1(stream_path), g2(prefix + "_hist.svg"),
      g3(prefix + "_acf.svg"), g4(prefix + "_tail.svg");

  GenerateArgs gen;
  gen.spec.n_bits = 8;
  gen.spec.mu = 0.5;
  gen.spec.sigma = 0.2;
  gen.spec.spacing_sweeps = 1;
  gen.samples = 2000;
  gen.seed = 3;
  gen.opts.burn_in_sweeps = 10;
  gen.out_binary = stream_path;
  std::ostringstream log;
  cmd_generate(gen, log);

  AnalyzeArgs an;
  an.input = stream_path;
  an.svg_prefix = prefix;
  cmd_analyze(an, log);

  for (const auto* suffix : {"_hist.svg", "_acf.svg", "_tail.svg"}) {
    const std::string doc = slurp(prefix + suffix);
    CAPTURE(suffix);
    CHECK(well_formed(doc));
  }
}

}

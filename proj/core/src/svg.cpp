#include "ibi/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string_view>
#include <vector>

#include "ibi/sampling.hpp"

namespace ibi {
namespace {

constexpr double kDiskCx = 290.0;
constexpr double kDiskCy = 300.0;
constexpr double kDiskR = 240.0;
constexpr double kWidth = 760.0;
constexpr double kHeight = 600.0;

struct LevelPoints {
  double level = 0.0;
  std::vector<Point2> points;
};

struct Marked {
  std::string_view name;
  std::string_view color;
  ShapePoint shape;
};

struct PlotData {
  ShapePoint observed;
  std::vector<LevelPoints> levels;  // ascending level
  std::optional<ShapePoint> median;
  std::optional<ShapePoint> max_tau;
  std::optional<ShapePoint> min_tau;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double sx(double u) { return kDiskCx + kDiskR * u; }
double sy(double v) { return kDiskCy - kDiskR * v; }

// Narrowest level darkest so inner regions stay visible on top.
std::string_view level_color(std::size_t index) {
  static constexpr std::string_view kPalette[] = {"#1f4e99", "#6f9bd8",
                                                  "#b9cfee", "#dde7f6"};
  return kPalette[std::min<std::size_t>(index, std::size(kPalette) - 1)];
}

void marker(std::string& out, const Marked& m) {
  const double x = sx(m.shape.u());
  const double y = sy(m.shape.v());
  out += "    <path d=\"M " + num(x) + " " + num(y - 7) + " L " + num(x + 7) +
         " " + num(y) + " L " + num(x) + " " + num(y + 7) + " L " +
         num(x - 7) + " " + num(y) + " Z\" fill=\"" + std::string(m.color) +
         "\" stroke=\"black\" stroke-width=\"1\"><title>" +
         std::string(m.name) + "</title></path>\n";
}

void glyph(std::string& out, const Marked& m, double x0, double y0,
           double size) {
  const Configuration config =
      mean_configuration_from_shape(m.shape.r(), m.shape.phi(), 2);
  const auto& x = config.matrix();
  double extent = 1e-12;
  for (int j = 0; j < 3; ++j) {
    extent = std::max({extent, std::abs(x(0, j)), std::abs(x(1, j))});
  }
  const double scale = 0.36 * size / extent;
  const double cx = x0 + size / 2.0;
  const double cy = y0 + size / 2.0 + 6.0;
  auto px = [&](int j) { return cx + scale * x(0, j); };
  auto py = [&](int j) { return cy - scale * x(1, j); };

  out += "  <g class=\"glyph\" id=\"glyph-" + std::string(m.name) + "\">\n";
  out += "    <rect x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" +
         num(size) + "\" height=\"" + num(size) +
         "\" fill=\"white\" stroke=\"#999999\"/>\n";
  out += "    <text x=\"" + num(x0 + 4) + "\" y=\"" + num(y0 + 12) +
         "\" font-size=\"10\">" + std::string(m.name) + "</text>\n";
  out += "    <polygon points=\"";
  for (int j = 0; j < 3; ++j) {
    if (j) out += " ";
    out += num(px(j)) + "," + num(py(j));
  }
  out += "\" fill=\"" + std::string(m.color) +
         "\" fill-opacity=\"0.35\" stroke=\"black\" stroke-width=\"1\"/>\n";
  static constexpr std::string_view kNames[] = {"A", "B", "C"};
  for (int j = 0; j < 3; ++j) {
    out += "    <circle cx=\"" + num(px(j)) + "\" cy=\"" + num(py(j)) +
           "\" r=\"2\" fill=\"black\"/>\n";
    out += "    <text x=\"" + num(px(j) + 3) + "\" y=\"" + num(py(j) - 3) +
           "\" font-size=\"9\">" + std::string(kNames[j]) + "</text>\n";
  }
  out += "  </g>\n";
}

std::string render(const PlotData& data, const SvgOptions& options) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(kWidth) + "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " +
         num(kWidth) + " " + num(kHeight) + "\">\n";
  out += "  <title>" + escape(options.title) + "</title>\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "  <text x=\"" + num(kDiskCx) + "\" y=\"30\" text-anchor=\"middle\" "
         "font-size=\"16\">" + escape(options.title) + "</text>\n";

  out += "  <g id=\"disk\" fill=\"none\" stroke=\"black\">\n";
  out += "    <circle cx=\"" + num(kDiskCx) + "\" cy=\"" + num(kDiskCy) +
         "\" r=\"" + num(kDiskR) + "\" stroke-width=\"1.5\"/>\n";
  out += "    <circle cx=\"" + num(kDiskCx) + "\" cy=\"" + num(kDiskCy) +
         "\" r=\"" + num(kDiskR / 2) +
         "\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
  out += "    <line x1=\"" + num(sx(-1)) + "\" y1=\"" + num(kDiskCy) +
         "\" x2=\"" + num(sx(1)) + "\" y2=\"" + num(kDiskCy) +
         "\" stroke=\"#cccccc\"/>\n";
  out += "    <line x1=\"" + num(kDiskCx) + "\" y1=\"" + num(sy(-1)) +
         "\" x2=\"" + num(kDiskCx) + "\" y2=\"" + num(sy(1)) +
         "\" stroke=\"#cccccc\"/>\n";
  out += "  </g>\n";
  out += "  <text x=\"" + num(sx(1) + 6) + "\" y=\"" + num(kDiskCy + 4) +
         "\" font-size=\"12\">u</text>\n";
  out += "  <text x=\"" + num(kDiskCx + 4) + "\" y=\"" + num(sy(1) - 6) +
         "\" font-size=\"12\">v</text>\n";

  // Widest level first so narrower regions are drawn over it.
  for (std::size_t i = data.levels.size(); i-- > 0;) {
    const auto& lp = data.levels[i];
    const auto color = level_color(i);
    char id[32];
    std::snprintf(id, sizeof id, "region-%.0f", lp.level * 100.0);
    out += "  <g id=\"" + std::string(id) + "\" fill=\"" +
           std::string(color) + "\" stroke=\"none\">\n";
    for (const auto& p : lp.points) {
      out += "    <circle cx=\"" + num(sx(p.x())) + "\" cy=\"" +
             num(sy(p.y())) + "\" r=\"1.5\"/>\n";
    }
    out += "  </g>\n";
  }

  std::vector<Marked> marks;
  if (data.median) marks.push_back({"median", "#2ca02c", *data.median});
  if (data.max_tau) marks.push_back({"max-tau", "#ff7f0e", *data.max_tau});
  if (data.min_tau) marks.push_back({"min-tau", "#9467bd", *data.min_tau});
  marks.push_back({"observed", "#d62728", data.observed});

  out += "  <g id=\"markers\">\n";
  for (const auto& m : marks) marker(out, m);
  out += "  </g>\n";

  if (options.glyphs) {
    const double size = 100.0;
    double y = 60.0;
    for (const auto& m : marks) {
      glyph(out, m, kWidth - size - 30.0, y, size);
      y += size + 12.0;
    }
  }

  out += "  <g id=\"legend\" font-size=\"11\">\n";
  double ly = kHeight - 20.0 - 16.0 * static_cast<double>(
                                          marks.size() + data.levels.size());
  for (std::size_t i = 0; i < data.levels.size(); ++i) {
    char label[48];
    std::snprintf(label, sizeof label, "%.0f%% region", data.levels[i].level * 100.0);
    out += "    <circle cx=\"20.00\" cy=\"" + num(ly) + "\" r=\"4\" fill=\"" +
           std::string(level_color(i)) + "\"/>\n";
    out += "    <text x=\"30.00\" y=\"" + num(ly + 4) + "\">" + label +
           "</text>\n";
    ly += 16.0;
  }
  for (const auto& m : marks) {
    out += "    <rect x=\"15.00\" y=\"" + num(ly - 5) +
           "\" width=\"10\" height=\"10\" fill=\"" + std::string(m.color) +
           "\"/>\n";
    out += "    <text x=\"30.00\" y=\"" + num(ly + 4) + "\">" +
           std::string(m.name) + "</text>\n";
    ly += 16.0;
  }
  out += "  </g>\n";
  out += "</svg>\n";
  return out;
}

std::vector<Point2> member_points(const ConfidenceRegion& cr,
                                  const BootstrapEnsemble& ens) {
  std::vector<Point2> pts;
  pts.reserve(cr.members.size());
  for (std::size_t idx : cr.members) pts.push_back(ens.replicates[idx].uv());
  return pts;
}

}  // namespace

std::string render_shape_space_svg(const AnalysisReport& report,
                                   const SvgOptions& options) {
  PlotData data;
  data.observed = report.observed_shape;
  for (const auto& lr : report.levels) {
    data.levels.push_back({lr.level, member_points(lr.region, report.ensemble)});
  }
  if (!report.levels.empty()) {
    const auto& s = report.levels.back().summary;
    data.median = s.median.shape;
    data.max_tau = s.max_tau.shape;
    data.min_tau = s.min_tau.shape;
  }
  return render(data, options);
}

std::string render_shape_space_svg(const BootstrapEnsemble& ensemble,
                                   const ShapePoint& observed,
                                   std::span<const double> levels,
                                   const SvgOptions& options) {
  PlotData data;
  data.observed = observed;
  if (!ensemble.replicates.empty()) {
    std::vector<double> sorted(levels.begin(), levels.end());
    std::sort(sorted.begin(), sorted.end());
    const auto depths = replicate_depths(ensemble, 1);
    std::optional<ConfidenceRegion> widest;
    for (double level : sorted) {
      ConfidenceRegion cr = confidence_region(ensemble, level, depths);
      data.levels.push_back({level, member_points(cr, ensemble)});
      widest = std::move(cr);
    }
    if (widest) {
      const RegionSummary s = region_summary(*widest, ensemble);
      data.median = s.median.shape;
      data.max_tau = s.max_tau.shape;
      data.min_tau = s.min_tau.shape;
    }
  }
  return render(data, options);
}

}  // namespace ibi

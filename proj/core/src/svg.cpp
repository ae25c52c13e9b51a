#include "cartanqm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "cartanqm/scan_io.hpp"
#include "cartanqm/version.hpp"

namespace cartanqm {

namespace {

// Four-stop ramp, dark blue -> teal -> yellow; close enough to the usual
// density-map palettes and cheap to keep deterministic.
struct Stop {
  double t;
  int r, g, b;
};
constexpr Stop kStops[] = {
    {0.00, 13, 8, 135},
    {0.40, 0, 128, 128},
    {0.75, 240, 200, 60},
    {1.00, 255, 255, 210},
};

int lerp_channel(int a, int b, double t) {
  return static_cast<int>(std::lround(a + (b - a) * t));
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

std::string heatmap_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const Stop* lo = &kStops[0];
  const Stop* hi = &kStops[0];
  for (const Stop& s : kStops) {
    if (s.t <= t) lo = &s;
    if (s.t >= t) {
      hi = &s;
      break;
    }
  }
  double f = (hi->t > lo->t) ? (t - lo->t) / (hi->t - lo->t) : 0.0;
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", lerp_channel(lo->r, hi->r, f),
                lerp_channel(lo->g, hi->g, f), lerp_channel(lo->b, hi->b, f));
  return buf;
}

namespace {

constexpr int kCellPx = 2;        // density bins render as 2x2 px
constexpr int kMarginLeft = 60;
constexpr int kMarginBottom = 40;
constexpr int kMarginTop = 30;
constexpr int kMarginRight = 20;

void svg_header(std::ostringstream& out, int width, int height) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<!-- cartanqm " << version_string << " schema=" << schema_version << " -->\n";
}

void axis_text(std::ostringstream& out, int x, int y, const std::string& text,
               const char* anchor = "middle") {
  out << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"11\" font-family=\"monospace\""
      << " text-anchor=\"" << anchor << "\">" << text << "</text>\n";
}

}  // namespace

std::string density_heatmap_svg(const std::vector<ScanRecord>& records,
                                const DensityWindow& window, const std::string& title) {
  if (records.empty()) throw std::domain_error("cannot render a heatmap from an empty dataset");

  int n = window.bins;
  std::vector<std::vector<std::uint64_t>> counts(
      static_cast<std::size_t>(n), std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  std::uint64_t max_count = 0;
  std::uint64_t clipped = 0;

  double px_range = window.p_max - window.p_min;
  double sy_range = window.inv_s_max - window.inv_s_min;
  for (const ScanRecord& r : records) {
    if (!std::isfinite(r.p) || r.p < window.p_min || r.p > window.p_max ||
        r.inv_s < window.inv_s_min || r.inv_s > window.inv_s_max) {
      ++clipped;
      continue;
    }
    int bx = std::min(n - 1, static_cast<int>((r.p - window.p_min) / px_range * n));
    int by = std::min(n - 1, static_cast<int>((r.inv_s - window.inv_s_min) / sy_range * n));
    std::uint64_t& c = counts[static_cast<std::size_t>(bx)][static_cast<std::size_t>(by)];
    max_count = std::max(max_count, ++c);
  }

  int plot_w = n * kCellPx, plot_h = n * kCellPx;
  int width = kMarginLeft + plot_w + kMarginRight;
  int height = kMarginTop + plot_h + kMarginBottom;

  std::ostringstream out;
  svg_header(out, width, height);
  out << "<!-- records=" << records.size() << " clipped=" << clipped << " -->\n";
  out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"" << heatmap_color(0.0) << "\"/>\n";

  double log_max = std::log1p(static_cast<double>(max_count));
  for (int bx = 0; bx < n; ++bx) {
    for (int by = 0; by < n; ++by) {
      std::uint64_t c = counts[static_cast<std::size_t>(bx)][static_cast<std::size_t>(by)];
      if (c == 0) continue;
      double t = (log_max > 0.0) ? std::log1p(static_cast<double>(c)) / log_max : 1.0;
      int x = kMarginLeft + bx * kCellPx;
      int y = kMarginTop + (n - 1 - by) * kCellPx;  // inv_s grows upward
      out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCellPx << "\" height=\""
          << kCellPx << "\" fill=\"" << heatmap_color(t) << "\"/>\n";
    }
  }

  axis_text(out, kMarginLeft + plot_w / 2, 18, title);
  axis_text(out, kMarginLeft, kMarginTop + plot_h + 16, label(window.p_min));
  axis_text(out, kMarginLeft + plot_w, kMarginTop + plot_h + 16, label(window.p_max));
  axis_text(out, kMarginLeft + plot_w / 2, kMarginTop + plot_h + 32, "p");
  axis_text(out, kMarginLeft - 6, kMarginTop + plot_h, label(window.inv_s_min), "end");
  axis_text(out, kMarginLeft - 6, kMarginTop + 10, label(window.inv_s_max), "end");
  axis_text(out, kMarginLeft - 6, kMarginTop + plot_h / 2, "1/s", "end");
  out << "</svg>\n";
  return out.str();
}

std::vector<std::vector<std::string>> noise_heatmap_colors(const NoiseScanResult& result) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& row : result.p)
    for (double v : row)
      if (std::isfinite(v)) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
  bool any_finite = std::isfinite(lo);
  double range = (any_finite && hi > lo) ? hi - lo : 1.0;

  std::vector<std::vector<std::string>> colors(result.p.size());
  for (std::size_t i = 0; i < result.p.size(); ++i) {
    colors[i].resize(result.p[i].size());
    for (std::size_t j = 0; j < result.p[i].size(); ++j) {
      double v = result.p[i][j];
      colors[i][j] = std::isfinite(v) ? heatmap_color((v - lo) / range) : kDivergentColor;
    }
  }
  return colors;
}

std::string noise_heatmap_svg(const NoiseScanResult& result) {
  if (result.p.empty() || result.p.front().empty())
    throw std::domain_error("cannot render a heatmap from an empty dataset");

  int ng = result.grid.n_gamma, np = result.grid.n_phi;
  int cell_w = std::max(2, 640 / ng);
  int cell_h = std::max(2, 480 / np);
  int plot_w = ng * cell_w, plot_h = np * cell_h;
  int width = kMarginLeft + plot_w + kMarginRight;
  int height = kMarginTop + plot_h + kMarginBottom;

  auto colors = noise_heatmap_colors(result);

  std::ostringstream out;
  svg_header(out, width, height);
  out << "<!-- class=" << probe_class_name(result.grid.probe)
      << " family=" << noise_family_name(result.family)
      << " scope=" << noise_scope_name(result.scope) << " lambda="
      << format_double(result.lambda.l1) << ',' << format_double(result.lambda.l2) << ','
      << format_double(result.lambda.l3) << " -->\n";

  for (int i = 0; i < ng; ++i) {
    for (int j = 0; j < np; ++j) {
      int x = kMarginLeft + i * cell_w;
      int y = kMarginTop + (np - 1 - j) * cell_h;  // phi grows upward
      out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell_w << "\" height=\""
          << cell_h << "\" fill=\"" << colors[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
          << "\"/>\n";
    }
  }

  std::string title = std::string("p(gamma, phi)  ") + probe_class_name(result.grid.probe) + " " +
                      noise_family_name(result.family) + "/" + noise_scope_name(result.scope);
  axis_text(out, kMarginLeft + plot_w / 2, 18, title);
  axis_text(out, kMarginLeft, kMarginTop + plot_h + 16, "0");
  axis_text(out, kMarginLeft + plot_w, kMarginTop + plot_h + 16, "1");
  axis_text(out, kMarginLeft + plot_w / 2, kMarginTop + plot_h + 32, "gamma");
  axis_text(out, kMarginLeft - 6, kMarginTop + plot_h, "0", "end");
  axis_text(out, kMarginLeft - 6, kMarginTop + 10, "2pi", "end");
  axis_text(out, kMarginLeft - 6, kMarginTop + plot_h / 2, "phi", "end");
  out << "</svg>\n";
  return out.str();
}

}  // namespace cartanqm

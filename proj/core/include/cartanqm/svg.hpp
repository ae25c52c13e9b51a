#pragma once

#include <string>
#include <vector>

#include "cartanqm/noise.hpp"
#include "cartanqm/sampling.hpp"

namespace cartanqm {

/// Binning window for the (p, Det[Q]) density map. Defaults match the
/// displayed region: p clipped to [3/4, 5], Det[Q] in [0, 64], 256x256 bins.
struct DensityWindow {
  double p_min = 0.75;
  double p_max = 5.0;
  double inv_s_min = 0.0;
  double inv_s_max = 64.0;
  int bins = 256;
};

/// Color ramp used by both heatmap flavors; t in [0, 1] -> "#rrggbb".
std::string heatmap_color(double t);

/// Fill used for divergent (+inf) cells.
inline constexpr const char* kDivergentColor = "#ff00ff";

/// Density heatmap of scan records in the (p, Det[Q]) plane, log-scaled
/// counts. Records outside the window (including p = inf) are clipped out.
/// Deterministic bytes for identical input; throws std::domain_error on an
/// empty dataset.
std::string density_heatmap_svg(const std::vector<ScanRecord>& records,
                                const DensityWindow& window = DensityWindow{},
                                const std::string& title = "trace-determinant density");

/// Per-cell fill colors of the noise-scan heatmap, indexed [gamma][phi];
/// finite p on the shared ramp, divergent cells in kDivergentColor.
std::vector<std::vector<std::string>> noise_heatmap_colors(const NoiseScanResult& result);

/// Heatmap of p over the (gamma, phi) grid with axis annotations.
std::string noise_heatmap_svg(const NoiseScanResult& result);

}  // namespace cartanqm

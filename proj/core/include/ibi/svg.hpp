#pragma once

// Static shape-space plots: the unit disk of triangle shapes with bootstrap
// confidence-region members and marked summary triangles.

#include <span>
#include <string>

#include "ibi/inference.hpp"
#include "ibi/report.hpp"

namespace ibi {

struct SvgOptions {
  std::string title = "Triangle shape space";
  /// Draw the inset triangle glyphs for the marked shapes.
  bool glyphs = true;
};

/// Plot of a finished analysis. The median and extreme-tau shapes come from
/// the widest level.
std::string render_shape_space_svg(const AnalysisReport& report,
                                   const SvgOptions& options = {});

/// Plot straight from an ensemble. Regions are computed for every level; an
/// empty ensemble yields the disk with only the observed marker.
std::string render_shape_space_svg(const BootstrapEnsemble& ensemble,
                                   const ShapePoint& observed,
                                   std::span<const double> levels,
                                   const SvgOptions& options = {});

}  // namespace ibi

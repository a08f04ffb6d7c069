#pragma once

#include "isokura/basin.hpp"
#include "isokura/equilibria.hpp"

#include <string>
#include <vector>

namespace isokura::cli {

/// Basin classification as a square heatmap. Self-contained SVG 1.1.
std::string render_basin_svg(const BasinGrid& grid, bool deterministic);

/// Energy-vs-ratio chart: one colored curve per critical point, solid where
/// stable, dashed where unstable or degenerate.
std::string render_figure1_svg(const std::vector<Figure1Row>& rows, bool deterministic);

} // namespace isokura::cli

#pragma once

#include <iosfwd>

#include "kerrneg/sweep.hpp"

namespace kerrneg {

/// Renders the rows of a finished sweep (no recomputation): a line chart for
/// 1D scans, a character-ramp heatmap for 2D surfaces.
void render_ascii(std::ostream& out, const SweepResult& result);

}  // namespace kerrneg

#pragma once

#include <optional>
#include <string_view>

#include "kerrneg/sweep.hpp"

namespace kerrneg {

/// The published panels this tool reproduces. fig1*: negativity vs time,
/// fig2*: vs coupling, fig3: Kerr x theta surface, fig4*: time x theta surface.
enum class FigureId {
    fig1a, fig1b, fig1c,
    fig2a, fig2b, fig2c,
    fig3,
    fig4a, fig4b, fig4c,
};

const char* figure_name(FigureId id);
std::optional<FigureId> figure_from_name(std::string_view name);

/// Canonical parameter binding and grid for one panel. Grids are dense enough
/// to resolve the fastest Rabi oscillation of the bound parameters with at
/// least ten samples per period.
SweepSpec figure_spec(FigureId id);

}  // namespace kerrneg

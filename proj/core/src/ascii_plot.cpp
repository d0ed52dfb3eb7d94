#include "ascii_plot.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "kerrneg/csv.hpp"

namespace kerrneg {

namespace {

constexpr int kWidth = 72;
constexpr int kHeight = 20;
constexpr const char* kRamp = " .:-=+*#%@";

void render_line(std::ostream& out, const SweepResult& result) {
    const auto& rows = result.rows;
    double y_max = 0.0;
    for (const SweepRow& row : rows) y_max = std::max(y_max, row.negativity);
    if (y_max <= 0.0) y_max = 1e-12;

    std::vector<std::string> canvas(kHeight, std::string(kWidth, ' '));
    const std::size_t n = rows.size();
    for (int col = 0; col < kWidth; ++col) {
        // Downsample by max so narrow peaks stay visible.
        const std::size_t lo = col * n / kWidth;
        const std::size_t hi = std::max(lo + 1, (col + 1) * n / kWidth);
        double v = 0.0;
        for (std::size_t k = lo; k < hi && k < n; ++k)
            v = std::max(v, rows[k].negativity);
        const int h = static_cast<int>(std::lround(v / y_max * (kHeight - 1)));
        canvas[kHeight - 1 - h][col] = '*';
    }

    out << to_string(result.meta.axis1.parameter) << " in ["
        << format_double_shortest(result.meta.axis1.start) << ", "
        << format_double_shortest(result.meta.axis1.stop) << "], negativity in [0, "
        << format_double_shortest(y_max) << "]\n";
    for (const std::string& line : canvas) out << '|' << line << "|\n";
    out << '+' << std::string(kWidth, '-') << "+\n";
}

void render_heatmap(std::ostream& out, const SweepResult& result) {
    const AxisSpec& axis1 = result.meta.axis1;
    const AxisSpec& axis2 = *result.meta.axis2;
    double v_max = 0.0;
    for (const SweepRow& row : result.rows)
        v_max = std::max(v_max, row.negativity);
    if (v_max <= 0.0) v_max = 1e-12;

    const int plot_rows = std::min(kHeight * 2, axis1.count);
    const int plot_cols = std::min(kWidth, axis2.count);
    const int ramp_len = static_cast<int>(std::string(kRamp).size());

    out << "rows: " << to_string(axis1.parameter) << " in ["
        << format_double_shortest(axis1.start) << ", " << format_double_shortest(axis1.stop)
        << "]; cols: " << to_string(axis2.parameter) << " in ["
        << format_double_shortest(axis2.start) << ", " << format_double_shortest(axis2.stop)
        << "]; ramp '" << kRamp << "' spans [0, " << format_double_shortest(v_max)
        << "]\n";
    for (int r = 0; r < plot_rows; ++r) {
        const int i1 = r * (axis1.count - 1) / std::max(1, plot_rows - 1);
        std::string line(plot_cols, ' ');
        for (int c = 0; c < plot_cols; ++c) {
            const int i2 = c * (axis2.count - 1) / std::max(1, plot_cols - 1);
            const double v =
                result.rows[static_cast<std::size_t>(i1) * axis2.count + i2]
                    .negativity;
            const int level = std::min(
                ramp_len - 1,
                static_cast<int>(std::floor(v / v_max * (ramp_len - 1) + 0.5)));
            line[c] = kRamp[level];
        }
        out << '|' << line << "|\n";
    }
}

}  // namespace

void render_ascii(std::ostream& out, const SweepResult& result) {
    if (result.meta.axis2) {
        render_heatmap(out, result);
    } else {
        render_line(out, result);
    }
}

}  // namespace kerrneg

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kerrneg/model.hpp"

namespace kerrneg {

enum class SweepParameter { t, eta, zeta, theta };
enum class Engine { closed_form, oracle, both };

const char* to_string(SweepParameter p);
const char* to_string(Engine e);

/// Uniform inclusive grid over one parameter.
struct AxisSpec {
    SweepParameter parameter = SweepParameter::t;
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
};

/// Grid point i of an axis; endpoints are hit exactly.
double axis_value(const AxisSpec& axis, int index);

struct SweepSpec {
    ModelParams fixed;
    double fixed_t = 0.0;
    AxisSpec axis1;
    std::optional<AxisSpec> axis2;
    Engine engine = Engine::closed_form;
};

/// Throws ValidationError on malformed grids (count < 2, start >= stop,
/// duplicate axis parameters).
void validate(const SweepSpec& spec);

/// One evaluated grid point: the full parameter set plus the negativity from
/// the selected engine's pipeline, the analytic |ad|+|bc| shortcut, and (for
/// engine both) the closed-form-vs-brute-force gap.
struct SweepRow {
    double t = 0.0;
    double eta = 0.0;
    double zeta = 0.0;
    double theta = 0.0;
    int n1 = 0;
    int n2 = 0;
    double negativity = 0.0;
    double negativity_closed_form = 0.0;
    double engine_gap = 0.0;
};

struct SweepMeta {
    ModelParams fixed;
    double fixed_t = 0.0;
    AxisSpec axis1;
    std::optional<AxisSpec> axis2;
    Engine engine = Engine::closed_form;
    std::string timestamp;  ///< UTC, ISO-8601; provenance only, never serialized into rows
};

struct SweepResult {
    std::vector<SweepRow> rows;  ///< lexicographic by (axis1 index, axis2 index)
    SweepMeta meta;
};

/// Evaluates the grid. threads = 0 picks the hardware concurrency; rows and
/// values are identical for every thread count.
SweepResult run_sweep(const SweepSpec& spec, int threads = 0);

struct ArgmaxResult {
    SweepRow row;
    std::size_t index = 0;
};

/// Grid point with maximal negativity; ties go to the lexicographically
/// smallest axis indices. Throws ValidationError on an empty result.
ArgmaxResult argmax(const SweepResult& result);

/// Max over the grid of |closed-form negativity - brute-force negativity|.
/// Requires engine both.
double engine_gap_report(const SweepSpec& spec, int threads = 0);

}  // namespace kerrneg

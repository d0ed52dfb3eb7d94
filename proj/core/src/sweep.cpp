#include "kerrneg/sweep.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <thread>

#include "kerrneg/entanglement.hpp"
#include "kerrneg/errors.hpp"
#include "kerrneg/oracle.hpp"

namespace kerrneg {

const char* to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::t: return "T";
        case SweepParameter::eta: return "eta";
        case SweepParameter::zeta: return "zeta";
        case SweepParameter::theta: return "theta";
    }
    return "?";
}

const char* to_string(Engine e) {
    switch (e) {
        case Engine::closed_form: return "closed";
        case Engine::oracle: return "oracle";
        case Engine::both: return "both";
    }
    return "?";
}

double axis_value(const AxisSpec& axis, int index) {
    if (index == axis.count - 1) return axis.stop;
    return axis.start +
           index * ((axis.stop - axis.start) / (axis.count - 1));
}

namespace {

void validate_axis(const AxisSpec& axis, const char* which) {
    if (axis.count < 2)
        throw ValidationError(std::string(which) + ": count must be >= 2");
    if (!(axis.start < axis.stop))
        throw ValidationError(std::string(which) + ": start must be < stop");
    if (!std::isfinite(axis.start) || !std::isfinite(axis.stop))
        throw ValidationError(std::string(which) + ": bounds must be finite");
}

}  // namespace

void validate(const SweepSpec& spec) {
    validate(spec.fixed);
    if (!std::isfinite(spec.fixed_t)) throw ValidationError("t must be finite");
    validate_axis(spec.axis1, "axis");
    if (spec.axis2) {
        validate_axis(*spec.axis2, "axis2");
        if (spec.axis2->parameter == spec.axis1.parameter)
            throw ValidationError("axis2: axis parameters must be distinct");
    }
}

namespace {

struct GridPoint {
    ModelParams params;
    double t;
};

GridPoint resolve_point(const SweepSpec& spec, int i1, int i2) {
    GridPoint point{spec.fixed, spec.fixed_t};
    auto apply = [&](const AxisSpec& axis, int index) {
        const double v = axis_value(axis, index);
        switch (axis.parameter) {
            case SweepParameter::t: point.t = v; break;
            case SweepParameter::eta: point.params.eta = v; break;
            case SweepParameter::zeta: point.params.zeta = v; break;
            case SweepParameter::theta: point.params.theta = v; break;
        }
    };
    apply(spec.axis1, i1);
    if (spec.axis2) apply(*spec.axis2, i2);
    return point;
}

SweepRow evaluate_point(const SweepSpec& spec, const GridPoint& point) {
    validate(point.params);

    SweepRow row;
    row.t = point.t;
    row.eta = point.params.eta;
    row.zeta = point.params.zeta;
    row.theta = point.params.theta;
    row.n1 = point.params.n1;
    row.n2 = point.params.n2;

    auto eigen_path = [&](const AmplitudeSet& amps) {
        return negativity(mode_density(amps, point.params.n1, point.params.n2))
            .value;
    };

    switch (spec.engine) {
        case Engine::closed_form: {
            const AmplitudeSet amps = amplitudes(point.params, point.t);
            row.negativity = eigen_path(amps);
            row.negativity_closed_form = negativity_closed_form(amps);
            break;
        }
        case Engine::oracle: {
            const AmplitudeSet amps = amplitudes_oracle(point.params, point.t);
            row.negativity = eigen_path(amps);
            row.negativity_closed_form = negativity_closed_form(amps);
            break;
        }
        case Engine::both: {
            const AmplitudeSet closed = amplitudes(point.params, point.t);
            const AmplitudeSet oracle = amplitudes_oracle(point.params, point.t);
            row.negativity = eigen_path(closed);
            row.negativity_closed_form = negativity_closed_form(closed);
            row.engine_gap = std::abs(row.negativity - eigen_path(oracle));
            break;
        }
    }
    return row;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, int threads) {
    validate(spec);

    const int count1 = spec.axis1.count;
    const int count2 = spec.axis2 ? spec.axis2->count : 1;
    const std::size_t total = static_cast<std::size_t>(count1) * count2;

    SweepResult result;
    result.rows.resize(total);
    result.meta = {spec.fixed, spec.fixed_t, spec.axis1, spec.axis2,
                   spec.engine, utc_timestamp()};

    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }
    const std::size_t min_chunk = 64;
    const std::size_t workers =
        std::min<std::size_t>(threads, std::max<std::size_t>(1, total / min_chunk));

    auto run_range = [&](std::size_t begin, std::size_t end,
                         std::exception_ptr& error) noexcept {
        try {
            for (std::size_t k = begin; k < end; ++k) {
                const int i1 = static_cast<int>(k / count2);
                const int i2 = static_cast<int>(k % count2);
                try {
                    result.rows[k] = evaluate_point(spec, resolve_point(spec, i1, i2));
                } catch (const ValidationError& e) {
                    throw ValidationError(
                        "grid point (" + std::to_string(i1) + "," +
                        std::to_string(i2) + "): " + e.what());
                }
            }
        } catch (...) {
            error = std::current_exception();
        }
    };

    if (workers <= 1) {
        std::exception_ptr error;
        run_range(0, total, error);
        if (error) std::rethrow_exception(error);
        return result;
    }

    // Deterministic: each worker owns a contiguous index range and writes its
    // own slots; assembly order never depends on scheduling.
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t per = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * per;
        const std::size_t end = std::min(total, begin + per);
        if (begin >= end) break;
        pool.emplace_back(run_range, begin, end, std::ref(errors[w]));
    }
    for (auto& th : pool) th.join();
    for (auto& error : errors)
        if (error) std::rethrow_exception(error);
    return result;
}

ArgmaxResult argmax(const SweepResult& result) {
    if (result.rows.empty()) throw ValidationError("argmax: empty sweep result");
    std::size_t best = 0;
    for (std::size_t k = 1; k < result.rows.size(); ++k) {
        if (result.rows[k].negativity > result.rows[best].negativity) best = k;
    }
    return {result.rows[best], best};
}

double engine_gap_report(const SweepSpec& spec, int threads) {
    if (spec.engine != Engine::both)
        throw ValidationError("engine: gap report requires engine 'both'");
    const SweepResult result = run_sweep(spec, threads);
    double max_gap = 0.0;
    for (const SweepRow& row : result.rows)
        max_gap = std::max(max_gap, row.engine_gap);
    return max_gap;
}

}  // namespace kerrneg

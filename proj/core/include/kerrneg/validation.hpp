#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kerrneg/model.hpp"

namespace kerrneg {

struct PropertyResult {
    std::string name;
    double max_violation = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

struct ValidationOptions {
    std::uint64_t seed = 42;
    /// Random parameter draws for the cross-check properties.
    int draws = 100;
    /// Draws for the cheap normalization property.
    int normalization_draws = 1000;
    /// Random unit 4-vectors for the dual-route negativity property.
    int unit_vector_draws = 10000;
    /// Deliberate corruption for testing that the suite can fail.
    FaultInjection fault = FaultInjection::none;
};

/// Runs the full invariant suite with a fixed seed. Throws ValidationError on
/// nonsensical options (e.g. zero draws).
std::vector<PropertyResult> run_validation_suite(const ValidationOptions& options);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace kerrneg

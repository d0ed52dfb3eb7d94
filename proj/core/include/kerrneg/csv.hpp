#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kerrneg/sweep.hpp"

namespace kerrneg {

/// Fixed interchange header; one long-form row per grid point.
inline constexpr const char* kCsvHeader =
    "T,eta,zeta,theta,n1,n2,negativity,negativity_closed_form,engine_gap";

/// Locale-independent, 17 significant digits (round-trip exact for double).
std::string format_double(double value);

/// Locale-independent shortest round-trip form; for reports, not CSV.
std::string format_double_shortest(double value);

/// Parses a double serialized by format_double. Throws ValidationError.
double parse_double(const std::string& text);

/// Header plus rows, LF line endings.
void write_csv(std::ostream& out, const SweepResult& result);

/// Reads rows written by write_csv; checks the header.
std::vector<SweepRow> read_csv(std::istream& in);

}  // namespace kerrneg

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kerrneg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitIoError = 3;

/// Angle parser: a plain real, or exact multiples of pi written as
/// "[k]pi[/d]" ("pi/4", "3pi/4", "-pi/2", "2pi"). Throws ValidationError.
double parse_angle(const std::string& text);

/// Runs the command-line front end. args excludes the program name.
/// Returns the exit code (0 ok, 1 validation-suite failure, 2 bad input,
/// 3 I/O failure).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace kerrneg::cli

#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace radosc::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kNonConvergence = 3 };

/// Accepts raw radians ("1.25") or multiples of pi ("pi", "-0.5pi", "3pi/2", "pi/4").
std::optional<double> parse_phase(const std::string& text);

/// Runs one subcommand. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace radosc::cli

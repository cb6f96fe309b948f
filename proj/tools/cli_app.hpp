#pragma once

#include <iosfwd>
#include <string>

namespace gibbs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInsufficientData = 3;

/// Parse "0.3", "pi", "-pi/2", "5pi/8", "5*pi/8", "1/3".
double parse_angle(const std::string& text);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gibbs::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crnreal::cli {

constexpr int kExitRealized = 0;
constexpr int kExitNoRealization = 10;
constexpr int kExitError = 2;

/// Runs crn-realize with args[0] as the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace crnreal::cli

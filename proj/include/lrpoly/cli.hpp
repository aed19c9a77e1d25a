#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lrpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name. JSON goes to `out` (or --output), errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrpoly::cli

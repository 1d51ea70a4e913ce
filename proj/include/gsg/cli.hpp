#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gsg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. The report goes to
/// `out` as JSON (or CSV with --format csv); usage errors go to `err`.
/// Exit code 1 exactly when the report's violations list is nonempty.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace gsg::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace l2sig::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one subcommand. Reports go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on domain/validation/input errors, 2 on usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace l2sig::cli

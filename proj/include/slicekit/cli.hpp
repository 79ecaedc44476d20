#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slicekit/error.hpp"

namespace slicekit {

inline constexpr const char* kVersion = "0.1.0";

/// 1 for bad input, 2 for unmet preconditions, 3 for resource limits.
int exit_code(ErrorKind kind);

/// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicekit

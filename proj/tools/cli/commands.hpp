#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fibfield/modarith.hpp"

namespace fibfield::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitTheoremViolation = 1,
  kExitUsage = 2,
};

/// Resolves FIBFIELD_CAP. The variable may only lower the default cap; larger
/// values are clamped with a warning. Returns nullopt for unparsable values.
std::optional<u64> resolve_cap(const std::optional<std::string>& env_value, std::ostream& err);

/// Runs one command line (without the program name). All output goes to the
/// given streams; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& cap_env = std::nullopt);

}  // namespace fibfield::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace zpflt::cli {

enum ExitCode : int { ok = 0, failure = 1, invalid_args = 2, inconclusive = 3 };

/// Runs one subcommand. args excludes the program name. The report goes to
/// out (JSON or flattened text), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One "path: value" line per scalar leaf, in document order.
std::string flatten(const nlohmann::ordered_json& report);

}  // namespace zpflt::cli

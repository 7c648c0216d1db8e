#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcfg::cli {

/// Runs one subcommand (validate / reconstruct / generate / convert /
/// glue / iso) and prints its JSON report to `out`.  Exit codes: 0 pass,
/// 1 a check failed, 2 unusable input (schema, unknown spec, bad flags).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace gcfg::cli

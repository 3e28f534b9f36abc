#pragma once

#include "nilvar/classify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nilvar {

/// Exit codes of the command-line tool.
enum ExitCode { exit_ok = 0, exit_usage = 1, exit_verify_failed = 2 };

/// Entry point of `nilvar`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Figure-style rendering: one "label dim" row per component, grouped by kind.
std::string render_table(const Classification& c);

} // namespace nilvar

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nc::cli {

/// Runs one invocation. `args` excludes the program name. Returns the exit
/// code: 0 success, 1 negative answer or failed check, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Coverage {
  std::string_view operation;
  std::string_view subcommand;  // space-separated path, e.g. "geom trace"
};

/// Which subcommand exposes each library operation.
std::span<const Coverage> operation_coverage();

/// Every subcommand path the dispatcher knows.
std::vector<std::string> subcommand_paths();

}  // namespace nc::cli

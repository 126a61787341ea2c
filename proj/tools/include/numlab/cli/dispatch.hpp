#pragma once

// Command-line front end. `dispatch` never touches the process streams, so
// the whole command surface can be exercised in-process.

#include <string>
#include <vector>

namespace numlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // guard violations, failed preconditions
inline constexpr int kExitUsage = 2;   // unknown subcommand, bad flags, unparsable input

/// Every JSON document carries this under "schema".
inline constexpr const char* kJsonSchema = "numlab-cli/1";

struct CommandOutcome {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// `args` excludes the program name, e.g. {"numbers", "symmetry", "--poly", "x^3-2"}.
CommandOutcome dispatch(const std::vector<std::string>& args);

/// A leaf subcommand and the library operations it invokes.
struct Route {
  std::string path;  // "topo homology"
  std::vector<std::string> operations;
};

const std::vector<Route>& routes();

/// Every public operation of the library, as "module.operation".
const std::vector<std::string>& library_operations();

}  // namespace numlab::cli

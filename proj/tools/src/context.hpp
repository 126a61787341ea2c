#pragma once

// Shared plumbing for the subcommand implementations.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "numlab/cli/dispatch.hpp"
#include "numlab/sets.hpp"

namespace numlab::cli {

/// Malformed command-line values or unreadable files (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostringstream out;
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  bool json = false;

  /// Starts the JSON document for `command`.
  void begin(const std::string& command) {
    doc["schema"] = kJsonSchema;
    doc["command"] = command;
  }
};

/// Adds the per-subcommand --json flag.
inline void add_json_flag(CLI::App* sub, Context& ctx) {
  sub->add_flag("--json", ctx.json, "Emit a JSON document instead of text");
}

inline std::string status_name(sets::PullStatus s) {
  switch (s) {
    case sets::PullStatus::Item: return "item";
    case sets::PullStatus::Exhausted: return "exhausted";
    case sets::PullStatus::BudgetExceeded: return "budget-exceeded";
    case sets::PullStatus::DeciderFailure: return "decider-failure";
  }
  return "unknown";
}

/// Joins numbers (or their decimal strings) with `sep`.
template <class Range>
std::string join_numbers(const Range& xs, const char* sep = " ") {
  std::string s;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) s += sep;
    first = false;
    if constexpr (std::is_convertible_v<decltype(x), std::string>)
      s += x;
    else
      s += std::to_string(x);
  }
  return s;
}

std::string read_file(const std::string& path);
std::vector<std::uint64_t> parse_naturals(const std::string& csv);
/// "a..b", inclusive.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text);

void register_machine(CLI::App& app, Context& ctx);
void register_sets(CLI::App& app, Context& ctx);
void register_dioph(CLI::App& app, Context& ctx);
void register_reduce(CLI::App& app, Context& ctx);
void register_numbers(CLI::App& app, Context& ctx);
void register_topo(CLI::App& app, Context& ctx);

}  // namespace numlab::cli

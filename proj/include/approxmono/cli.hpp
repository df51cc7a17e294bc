#pragma once

// Command-line front end. `run` is the whole program minus process plumbing so
// that it can be driven from tests.

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "approxmono/error_envelopes.hpp"
#include "approxmono/grid.hpp"

namespace approxmono::cli {

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitFalse = 2;  ///< check failed / infeasible / hypothesis violated

struct ConstantError {
  double value = 0.0;
};
struct TableError {
  std::string path;
};

/// `power:<eps>,<p>`, `const:<c>` or `file:<path>`.
using ErrorSpec = std::variant<PowerErrorSpec, ConstantError, TableError>;

/// Throws ConstructionError on malformed text or invalid parameters.
ErrorSpec parse_error_spec(std::string_view text);

/// Materializes the spec on the offsets of `grid`. Table files must cover the
/// grid and share its step; extra offsets are dropped.
ErrorFn resolve_error_spec(const ErrorSpec& spec, const Grid& grid);

struct InputDigest {
  std::string path;
  std::string sha256;
};

struct RunReport {
  std::string command;
  std::vector<InputDigest> inputs;
  std::map<std::string, std::string> parameters;
  std::vector<Witness> witnesses;
  std::vector<std::string> outputs;
  std::map<std::string, std::string> metadata;
};

struct RunOutcome {
  int exit_code = kExitOk;
  RunReport report;
};

/// `args` excludes the program name. Results go to `out` (or to --output),
/// diagnostics to `err`.
RunOutcome run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// JSON form of a report, as embedded in JSON output and CSV sidecars.
std::string report_to_json(const RunReport& report);

}  // namespace approxmono::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/linop.hpp"

namespace qwalk {

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

enum class Command { validate, spectrum, generator, simulate, localize, infer_graph, fuzz };

const char* to_string(Command c);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int validation = 1;
inline constexpr int usage = 2;
inline constexpr int io = 3;
}  // namespace exit_code

struct RunConfig {
  Command command = Command::validate;

  // Input source; exactly one of these is set (fuzz needs none).
  std::optional<std::string> graph_path;
  std::optional<std::string> fixture;      // cycle:N, complete:N, path-loops:N, edge
  std::optional<std::string> random_spec;  // H:K:SEED or SEED
  std::optional<std::string> operator_path;  // infer-graph on a raw operator

  std::optional<std::string> blocks;  // "a=0;b=1,2" partition for --operator
  std::string weight_mode = "grover";  // grover | explicit
  std::optional<std::string> theta;    // one value for every edge, or a comma list per edge
  std::size_t steps = 100;
  std::string init = "arc:0";
  std::optional<std::pair<std::size_t, std::size_t>> window;  // localize, default [0, steps]

  std::optional<std::string> output;
  std::optional<std::string> walk_out;  // writes the WalkInstance JSON
  std::string format;                   // csv | json; empty means the command default
  double tol_ker = tol::kernel;
  bool verify = false;
  bool cesaro = false;
  bool limit = false;
  bool no_derived = false;
  std::pair<std::uint64_t, std::uint64_t> seeds{1, 50};

  bool help = false;
  std::string help_text;
};

/// args excludes the program name: args[0] is the command. Values from
/// --config <file.json> are applied first and flags override them; a
/// source given on the command line replaces any source in the file.
/// Throws UsageError for unknown commands, unknown keys, malformed JSON,
/// conflicting or missing sources and invalid values; IoError when the
/// config file cannot be read.
RunConfig parse_config(const std::vector<std::string>& args);

/// Exit codes: 0 success, 1 validation failure, 2 usage error, 3 I/O error.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_config + run_command with error reporting on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Initial state from "arc:<id>", "vertex-uniform:<v>", "random:<seed>" or a
/// JSON vector of reals or [re, im] pairs.
Vector parse_initial_state(const std::string& spec, Index dim, const Graph* g);

}  // namespace qwalk

#pragma once

#include "phinkit/io/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace phinkit::io {

/// Subcommands that read a JSON document.
const std::vector<std::string>& file_commands();
/// Subcommands driven by integer parameters.
const std::vector<std::string>& parameter_commands();

struct RunOptions {
  std::uint64_t seed = 0;
  std::optional<std::size_t> budget; ///< enumeration guard, command-specific meaning
};

/// Computes the report body for one command. `input` is the parsed document
/// for file commands and the parameter object for the drinfeld ones. Errors
/// propagate as the exception types of phinkit/error.hpp.
Json execute(const std::string& command, const Json& input, const RunOptions& opts);

/// Wraps execute() with the schema, command name, input hash and seed.
Json report(const std::string& command, const Json& input, const RunOptions& opts);

struct RunResult {
  int exit_code = 0;
  std::string out; ///< rendered report, or an error document
  std::string err; ///< one-line diagnostic on failure
};

/// Full pipeline with exceptions mapped to exit codes: 1 for invalid
/// input, 2 for a named precondition violation, 3 for a failed cross-check.
RunResult run(const std::string& command, const std::string& input_text, const Json& params,
              const RunOptions& opts, const std::string& format);

} // namespace phinkit::io

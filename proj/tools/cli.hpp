#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dedekind::cli {

// Outcome classes map to fixed exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  // usage, parse and arity errors
  kFuel = 2,
  kAxiomFailure = 3,
  kInvariantViolation = 4,
};

enum class OutputFormat { text, json };

struct CliConfig {
  std::uint64_t fuel = 1'000'000;
  std::string eps = "1e-6";
  OutputFormat format = OutputFormat::text;
};

// Reads {"fuel": n, "eps": "1e-6", "format": "text"|"json"}; any key may be
// omitted. Throws std::runtime_error on unreadable or invalid files.
CliConfig load_config(const std::string& path, CliConfig base = {});

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dedekind::cli

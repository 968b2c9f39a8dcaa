#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brainswap/perm.hpp"
#include "brainswap/verifier.hpp"

namespace brainswap::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalFailure = 1,  // a construction failed its own verification
  kUsage = 2,            // bad flags or unparsable input
  kConstraint = 3,       // odd target on a cycle machine, bad p, failed plan
};

enum class OutputFormat { text, json };

struct CliConfig {
  std::string subcommand;  // solve, verify, simulate, oracle, decompose
  MachineKind machine = MachineKind::swap2;
  std::optional<std::size_t> p;
  std::optional<std::size_t> n;
  std::string input;  // permutation text, or a file path ("-" for stdin)
  std::optional<std::string> target;  // verify with a plain-text plan
  OutputFormat format = OutputFormat::text;
  std::size_t max_len = kSearchMaxDepth;
};

// One cycle per line; '#' starts a comment; blank lines are skipped.
std::vector<Cycle> parse_history(std::string_view text);

// Parses argv-style arguments (without the program name) and executes.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

// Executes an already parsed configuration.
int execute(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace brainswap::cli

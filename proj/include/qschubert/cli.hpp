#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qschubert/cartan.hpp"

namespace qschubert {

/// A parsed and validated command line.
struct CommandRequest {
  std::string subcommand;  // product, coeff, reduce, pw-lift, q2c, verify, table
  std::string suite;       // verify only

  std::string type;
  int rank = 0;

  std::optional<std::string> u, v, w;
  std::optional<std::string> u_partition, v_partition, w_partition;
  std::optional<std::string> lambda;
  std::optional<std::string> parabolic;
  std::optional<std::string> grassmannian;  // "k" or "k,n"
  std::optional<int> degree;

  bool trace = false;
  bool strict = false;
  std::string format = "json";
  int jobs = 1;
  std::optional<std::string> cache_dir;

  // Filled by parse_args from the fields above.
  int grass_k = 0;
};

/// Parses argv[1..] (program name excluded) and validates every argument
/// against the selected root system. Throws UsageError / ConfigError.
/// Returns nullopt when help was printed to `out`.
std::optional<CommandRequest> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Executes a request; returns the process exit code.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// parse_args + run with error-to-exit-code mapping: 0 ok, 1 usage or
/// precondition, 2 invariant violation or failed verification.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qschubert

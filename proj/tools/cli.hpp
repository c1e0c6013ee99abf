#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "svbound/classical_bounds.hpp"
#include "svbound/ensemble.hpp"
#include "svbound/matrix_io.hpp"

namespace svbound::cli {

enum class Subcommand { bound, bench, verify };
enum class Mode { lower, upper, both };
enum class OutputFormat { human, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitMaxIter = 2;
inline constexpr int kExitVerifyFailed = 3;

struct CliRequest {
  Subcommand subcommand = Subcommand::bound;
  std::optional<std::string> input_path;  // "-" reads standard input
  std::optional<MatrixFormat> format;     // inferred from the file extension when unset
  Mode mode = Mode::both;
  std::optional<SeedKind> seed_kind;
  std::optional<double> seed_value;
  double tol_rel = 1e-14;
  std::size_t max_iter = 100000;
  OutputFormat output = OutputFormat::human;
  bool verify = false;
};

// Exit 0 when every requested run converged (or stopped on an exact
// eigenvalue), 2 when any run hit max_iter, 1 on input errors.
int cmd_bound(const CliRequest& request, std::istream& in, std::ostream& out, std::ostream& err);

// Header row then one CSV row per sample (or a JSON array with --output json).
int cmd_bench(const CliRequest& request, const SweepSpec& spec, unsigned threads, std::ostream& out,
              std::ostream& err);

// Exit 0 iff every invariant holds, 3 naming the first violation, 1 on input
// errors (including n > 64).
int cmd_verify(const CliRequest& request, std::istream& in, std::ostream& out, std::ostream& err);

// Full command line (args[0] is the program name). Reads SVBOUND_THREADS.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace svbound::cli

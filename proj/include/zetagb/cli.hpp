#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zetagb::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParameterError = 2,
  kPrecisionError = 3,
  kInconclusive = 4,
  kRefinementFailure = 5,
};

struct CliConfig {
  std::string command;  ///< eval | zeros | count | audit | params | bernoulli
  std::string format = "text";
  std::optional<std::string> output_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> cutoff_N;
  std::optional<int> tail_order_nu;

  double re = 0.0;
  double im = 0.0;
  std::optional<double> eps;
  double t_min = 0.0;
  double t_max = 0.0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double step = 0.25;
  double tol = 1e-8;
  int max_iter = 50;
  int max_index = 60;
  bool strict = false;
};

/// Runs `zeta-gb <command> [flags]`; args excludes the program name.
/// Results go to `out` (or --out), diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetagb::cli

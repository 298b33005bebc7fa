#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hulthen/model.hpp"

namespace hulthen::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kSchema = 1;

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kNumericalFailure = 3,
};

enum class Command { spectrum, wavefunction, verify, compare, degeneracy };
enum class Format { csv, json };

struct RunConfig {
  Command command = Command::spectrum;

  std::string units = "paper";  ///< "paper" (ħ = 2μ = e² = 1) or "custom"
  double Z = 1.0;
  double mu = 0.5;
  double hbar = 1.0;
  double e2 = 1.0;
  double c0 = 1.0 / 12.0;
  std::vector<double> alphas;  ///< empty: command default
  std::vector<int> dims;       ///< empty: command default

  int n_max = 3;
  int l_max = 2;
  int n = 0;  ///< wavefunction state
  int l = 0;

  Format format = Format::csv;
  bool pretty = false;
  std::string out;  ///< empty: standard output

  // wavefunction sampling
  int samples = 2000;
  std::optional<double> sample_r_max;

  // oracle overrides
  std::optional<int> grid_m;
  std::optional<double> grid_r_max;
  double tol = 1e-12;

  std::vector<std::string> modes = {"closed_c0", "closed_c0zero", "oracle_approx", "oracle_exact"};
  std::string suite = "all";
  double perturb_c0 = 1.0;  ///< verification sensitivity hook

  /// Physical parameters for one (α, D) point, with the unit preset applied.
  PhysicalParams params(double alpha, int D) const;
};

const char* to_string(Command command);

/// Runs one command, writing the table/report to `out` and notes to `err`.
/// Returns the process exit code; numeric and validation errors are mapped to
/// kNumericalFailure and kUsageError.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (including an optional `--config file` of `key = value` lines)
/// into a RunConfig. On failure prints usage to `err` and returns the exit
/// code in `exit_code`.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code);

}  // namespace hulthen::cli

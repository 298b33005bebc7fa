#pragma once

#include <string>
#include <vector>

namespace hulthen {

/// Outcome of one invariant suite.
struct SuiteResult {
  std::string name;
  std::string metric;  ///< what max_error measures
  int checks = 0;
  int failures = 0;
  int skipped = 0;
  double max_error = 0;
  double tolerance = 0;
  std::string first_failure;

  bool pass() const { return checks > 0 && failures == 0; }
};

struct VerifyOptions {
  std::vector<double> alphas = {0.025, 0.05, 0.1};
  std::vector<int> dims = {3, 4, 5};
  int n_max = 3;
  int l_max = 2;
  double c0 = 1.0 / 12.0;
  /// Test hook: multiplies c₀ on the closed-form side of the quantization
  /// suite only. Anything other than 1 must make that suite fail.
  double c0_perturbation = 1.0;
  unsigned seed = 20240611u;
};

/// vieta, riccati, jacobi, qcorr, momentum, quantization, appendix,
/// normalization, nodes.
const std::vector<std::string>& suite_names();

/// Throws InvalidParams for an unknown suite name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace hulthen

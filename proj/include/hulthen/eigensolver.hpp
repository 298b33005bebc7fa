#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hulthen/model.hpp"

namespace hulthen {

/// Uniform grid of m interior points r_i = (i+1)h on (0, r_max), h = r_max/(m+1).
struct Grid {
  double r_max = 60.0;
  int m = 20000;

  double h() const { return r_max / (m + 1); }
  double r(int i) const { return (i + 1) * h(); }
  /// Same r_max with the spacing halved.
  Grid refined() const { return {r_max, 2 * m + 1}; }
};

/// Three-point discretization of −(ħ²/2μ)R'' + V R with Dirichlet ends.
struct TridiagHamiltonian {
  Grid grid;
  std::vector<double> diag;     ///< m entries
  std::vector<double> offdiag;  ///< m − 1 entries, all equal
  CentrifugalMode mode = CentrifugalMode::approx;
};

TridiagHamiltonian assemble(const PhysicalParams& p, QuantumNumbers q, const Grid& grid,
                            CentrifugalMode mode);

/// Same stencil for an arbitrary potential.
TridiagHamiltonian assemble_potential(const Grid& grid, const std::function<double(double)>& V,
                                      double hbar, double mu);

/// Number of eigenvalues strictly below x (Sturm sequence).
int sturm_count(const TridiagHamiltonian& H, double x);
int sturm_count(const std::vector<double>& diag, const std::vector<double>& offdiag, double x);

/// The `count` smallest eigenvalues by Sturm bisection, ascending.
std::vector<double> lowest_eigenvalues(const std::vector<double>& diag,
                                       const std::vector<double>& offdiag, int count,
                                       double tol = 1e-12);
std::vector<double> lowest_eigenvalues(const TridiagHamiltonian& H, int count, double tol = 1e-12);

/// Unit eigenvector for a computed eigenvalue, by inverse iteration.
std::vector<double> eigenvector(const TridiagHamiltonian& H, double eigenvalue);

/// Strict sign changes, ignoring entries below `floor`·max|v|.
int count_sign_changes(const std::vector<double>& v, double floor = 1e-9);

struct OracleOptions {
  std::optional<double> r_max;
  std::optional<int> m;
  bool richardson = true;
  /// Fraction of the grid treated as the tail when checking decay at r_max.
  double tail_fraction = 0.01;
  double tail_threshold = 1e-8;
  int max_doublings = 4;
  double eigen_tol = 1e-12;  ///< Sturm bisection width
};

struct OracleLevel {
  int n = 0;
  double energy = 0;         ///< Richardson value (or coarse value if disabled)
  double energy_coarse = 0;  ///< spacing h
  double energy_fine = 0;    ///< spacing h/2
  int nodes = 0;             ///< sign changes of the coarse eigenvector
  Grid grid;
};

/// r_max = max(60, 40/(α ε̃)) for the highest bound level requested, m = 20000.
Grid default_grid(const PhysicalParams& p, int l, int count);

/// Lowest `count` levels below the continuum threshold (b c₀ for the approximated
/// term, 0 for the exact one). Throws NoBoundState if none exist.
std::vector<OracleLevel> solve_bound_states(const PhysicalParams& p, int l, CentrifugalMode mode,
                                            int count, const OracleOptions& options = {});

}  // namespace hulthen

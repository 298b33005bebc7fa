#include "hulthen/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hulthen/spectrum.hpp"

namespace hulthen {

TridiagHamiltonian assemble_potential(const Grid& grid, const std::function<double(double)>& V,
                                      double hbar, double mu) {
  if (grid.m < 2 || !(grid.r_max > 0.0)) throw InvalidParams("grid needs m >= 2 and r_max > 0");
  const double h = grid.h();
  const double kinetic = hbar * hbar / (2.0 * mu * h * h);
  TridiagHamiltonian H;
  H.grid = grid;
  H.diag.resize(grid.m);
  H.offdiag.assign(grid.m - 1, -kinetic);
  for (int i = 0; i < grid.m; ++i) H.diag[i] = 2.0 * kinetic + V(grid.r(i));
  return H;
}

TridiagHamiltonian assemble(const PhysicalParams& p, QuantumNumbers q, const Grid& grid,
                            CentrifugalMode mode) {
  p.validate();
  q.validate();
  auto H = assemble_potential(
      grid, [&](double r) { return effective_V(p, q, r, mode); }, p.hbar, p.mu);
  H.mode = mode;
  return H;
}

int sturm_count(const std::vector<double>& diag, const std::vector<double>& offdiag, double x) {
  constexpr double kTiny = 1e-300;
  int count = 0;
  double d = diag[0] - x;
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    if (d == 0.0) d = kTiny;
    d = diag[i] - x - offdiag[i - 1] * offdiag[i - 1] / d;
    if (d < 0.0) ++count;
  }
  return count;
}

int sturm_count(const TridiagHamiltonian& H, double x) { return sturm_count(H.diag, H.offdiag, x); }

std::vector<double> lowest_eigenvalues(const std::vector<double>& diag,
                                       const std::vector<double>& offdiag, int count, double tol) {
  const int m = static_cast<int>(diag.size());
  if (count < 0 || count > m) throw InvalidParams("lowest_eigenvalues: count must be in [0, m]");
  if (offdiag.size() + 1 != diag.size()) throw InvalidParams("offdiag must have m - 1 entries");
  // Gershgorin interval.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < m; ++i) {
    const double radius = (i > 0 ? std::abs(offdiag[i - 1]) : 0.0) +
                          (i + 1 < m ? std::abs(offdiag[i]) : 0.0);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  std::vector<double> out;
  out.reserve(count);
  double floor = lo;
  for (int k = 0; k < count; ++k) {
    double a = floor;
    double b = hi;
    int iter = 0;
    // Invariant: fewer than k+1 eigenvalues below a, at least k+1 below b.
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      if (!(mid > a && mid < b)) break;
      if (++iter > 500) throw ConvergenceFailure("lowest_eigenvalues: bisection cap reached");
      if (sturm_count(diag, offdiag, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out.push_back(0.5 * (a + b));
    floor = a;
  }
  return out;
}

std::vector<double> lowest_eigenvalues(const TridiagHamiltonian& H, int count, double tol) {
  return lowest_eigenvalues(H.diag, H.offdiag, count, tol);
}

std::vector<double> eigenvector(const TridiagHamiltonian& H, double eigenvalue) {
  const int m = static_cast<int>(H.diag.size());
  const double shift = eigenvalue + 1e-10 * std::max(1.0, std::abs(eigenvalue));
  std::vector<double> x(m, 1.0);
  std::vector<double> c(m), d(m);
  for (int sweep = 0; sweep < 3; ++sweep) {
    // Thomas algorithm on (H − shift) y = x.
    double denom = H.diag[0] - shift;
    if (denom == 0.0) denom = 1e-300;
    c[0] = m > 1 ? H.offdiag[0] / denom : 0.0;
    d[0] = x[0] / denom;
    for (int i = 1; i < m; ++i) {
      denom = H.diag[i] - shift - H.offdiag[i - 1] * c[i - 1];
      if (denom == 0.0) denom = 1e-300;
      c[i] = i + 1 < m ? H.offdiag[i] / denom : 0.0;
      d[i] = (x[i] - H.offdiag[i - 1] * d[i - 1]) / denom;
    }
    x[m - 1] = d[m - 1];
    for (int i = m - 2; i >= 0; --i) x[i] = d[i] - c[i] * x[i + 1];
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;
  }
  // Positive near the origin.
  const auto peak = std::max_element(x.begin(), x.end(), [](double a, double b) {
    return std::abs(a) < std::abs(b);
  });
  const double threshold = 1e-9 * std::abs(*peak);
  for (double v : x) {
    if (std::abs(v) > threshold) {
      if (v < 0.0) {
        for (double& w : x) w = -w;
      }
      break;
    }
  }
  return x;
}

int count_sign_changes(const std::vector<double>& v, double floor) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  const double cut = floor * peak;
  int changes = 0;
  int previous = 0;
  for (double x : v) {
    if (std::abs(x) <= cut) continue;
    const int s = x > 0.0 ? 1 : -1;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

Grid default_grid(const PhysicalParams& p, int l, int count) {
  const int bound = count_bound_states(p, l);
  double eps = 1.0;
  if (bound > 0) {
    const int n = std::min(count, bound) - 1;
    eps = epsilon_tilde(p, {std::max(n, 0), l});
  }
  return {std::max(60.0, 40.0 / (p.alpha * eps)), 20000};
}

std::vector<OracleLevel> solve_bound_states(const PhysicalParams& p, int l, CentrifugalMode mode,
                                            int count, const OracleOptions& options) {
  p.validate();
  if (count < 1) throw InvalidParams("solve_bound_states: count must be >= 1");
  const QuantumNumbers q{0, l};
  const DerivedParams dp = derive_params(p, q);
  const double threshold = mode == CentrifugalMode::approx ? dp.b * p.c0 : 0.0;

  Grid grid = default_grid(p, l, count);
  if (options.r_max) grid.r_max = *options.r_max;
  if (options.m) grid.m = *options.m;

  for (int attempt = 0;; ++attempt) {
    const auto coarse_H = assemble(p, q, grid, mode);
    const auto coarse = lowest_eigenvalues(coarse_H, count, options.eigen_tol);
    int bound = 0;
    while (bound < count && coarse[bound] < threshold) ++bound;
    if (bound == 0) throw NoBoundState("solve_bound_states: no eigenvalue below the continuum threshold");

    std::vector<std::vector<double>> vectors;
    for (int k = 0; k < bound; ++k) vectors.push_back(eigenvector(coarse_H, coarse[k]));

    // Tail check on the most extended level.
    const auto& top = vectors.back();
    double peak = 0.0;
    for (double v : top) peak = std::max(peak, std::abs(v));
    const int tail_start = static_cast<int>((1.0 - options.tail_fraction) * grid.m);
    double tail = 0.0;
    for (int i = tail_start; i < grid.m; ++i) tail = std::max(tail, std::abs(top[i]));
    if (tail > options.tail_threshold * peak && attempt < options.max_doublings) {
      grid.r_max *= 2.0;
      grid.m = 2 * grid.m + 1;
      continue;
    }

    std::vector<double> fine;
    if (options.richardson) fine = lowest_eigenvalues(assemble(p, q, grid.refined(), mode), bound, options.eigen_tol);

    std::vector<OracleLevel> out;
    for (int k = 0; k < bound; ++k) {
      OracleLevel level;
      level.n = k;
      level.energy_coarse = coarse[k];
      level.energy_fine = options.richardson ? fine[k] : coarse[k];
      level.energy =
          options.richardson ? (4.0 * level.energy_fine - level.energy_coarse) / 3.0 : coarse[k];
      level.nodes = count_sign_changes(vectors[k]);
      level.grid = grid;
      out.push_back(level);
    }
    return out;
  }
}

}  // namespace hulthen

#pragma once

#include <vector>

#include "hulthen/model.hpp"

namespace hulthen {

/// Rising factorial (y)_k = y(y+1)…(y+k−1).
double pochhammer(double y, int k);

/// Coefficients of ₂F₁(−n, B; C; y) = Σ_{k=0}^{n} c_k y^k. Throws InvalidC when
/// C is a nonpositive integer.
std::vector<double> hyp2f1_coefficients(int n, double B, double C);

/// Terminating Gauss series ₂F₁(−n, B; C; y) for y ∈ [0, 1].
double hyp2f1_truncated(int n, double B, double C, double y);

/// Jacobi polynomial P_n^{(A,B)}(x) from its explicit binomial expansion in
/// (x−1)/2 and (x+1)/2. Throws ParameterPole on Γ poles.
double jacobi_P(int n, double A, double B, double x);

enum class Normalization { none, closed, numeric };

/// R(r) = norm · y^ε̃ (1−y)^ν ₂F₁(−n, n + 2(ε̃+ν); 1 + 2ε̃; y), y = e^{−αr}.
struct RadialWavefunction {
  int n = 0;
  int l = 0;
  int D = 3;
  double alpha = 0;
  double eps_tilde = 0;
  double nu = 0;
  double energy = 0;            ///< closed-form level the function belongs to
  std::vector<double> coeffs;   ///< polynomial in y, n + 1 entries
  double norm = 1.0;
  Normalization normalization = Normalization::none;

  /// Throws NotBound when ε̃ ≤ 0.
  static RadialWavefunction build(const PhysicalParams& p, QuantumNumbers q,
                                  Normalization normalization = Normalization::closed);

  double operator()(double r) const;

  /// Polynomial factor and its first two derivatives in y.
  double polynomial(double y) const;
  double polynomial_d1(double y) const;
  double polynomial_d2(double y) const;
  /// Σ|c_k y^k|; the scale against which cancellation near a node is judged.
  double polynomial_magnitude(double y) const;
  /// The same polynomial through the Jacobi representation.
  double polynomial_via_jacobi(double y) const;
};

double radial_R(const PhysicalParams& p, QuantumNumbers q, double r, bool normalized);

/// Closed double-sum normalization from the Jacobi expansion and Beta integrals.
double normalization_closed(const PhysicalParams& p, QuantumNumbers q);

/// The double sum with (n+p)! in place of (n−p)!. Kept for comparison; it does
/// not normalize the function.
double normalization_printed(const PhysicalParams& p, QuantumNumbers q);

/// (∫₀^∞ R_unnorm² dr)^{−1/2} by adaptive quadrature in y = e^{−αr}.
double normalization_numeric(const PhysicalParams& p, QuantumNumbers q);

/// ∫₀^∞ R₁R₂ dr of two normalized states sharing (l, D, α).
double overlap(const PhysicalParams& p, QuantumNumbers first, QuantumNumbers second);

struct NodeScan {
  int count = 0;
  std::vector<double> nodes;  ///< bisection-refined node radii, ascending
  int points = 0;             ///< scan size at which the count stabilized
};

/// Sign changes of R(r) on (0, ∞), from a log-spaced scan doubled until the
/// count repeats on two consecutive refinements. Throws GridTooCoarse if it
/// never settles.
NodeScan count_nodes(const PhysicalParams& p, QuantumNumbers q, int initial_points = 2048);

/// |φ' + φ² + (2μ/ħ²)(E − V_eff(r))| with φ = R'/R from analytic derivatives
/// and E the closed-form level. Throws NodeProximity next to a node.
double riccati_residual(const PhysicalParams& p, QuantumNumbers q, double r,
                        CentrifugalMode mode = CentrifugalMode::approx);

}  // namespace hulthen

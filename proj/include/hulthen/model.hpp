#pragma once

#include "hulthen/errors.hpp"

namespace hulthen {

/// Which centrifugal term enters the radial equation: the true
/// (Λ²−1)ħ²/(8μr²) barrier or its exponential approximation.
enum class CentrifugalMode { exact, approx };

/// Problem definition for the D-dimensional Hulthén potential.
struct PhysicalParams {
  double alpha = 0.1;  ///< screening parameter (inverse length)
  double Z = 1.0;
  double mu = 0.5;
  double hbar = 1.0;
  double e2 = 1.0;
  int D = 3;
  double c0 = 1.0 / 12.0;  ///< constant of the centrifugal approximation

  /// ħ = 2μ = e = Z = 1.
  static PhysicalParams paper_units(double alpha, int D = 3, double c0 = 1.0 / 12.0);

  /// Throws InvalidParams when an invariant is violated.
  void validate() const;

  /// μZe²/(ħ²α): the dimensionless coupling every closed form depends on.
  double coupling() const;
  /// ħ²α²/(2μ): the natural energy unit of the screened problem.
  double energy_unit() const;
};

struct QuantumNumbers {
  int n = 0;
  int l = 0;

  void validate() const;
};

/// Algebraic intermediates shared by every closed-form expression.
struct DerivedParams {
  double a = 0;        ///< Z e² α
  double b = 0;        ///< α² L²
  double L2 = 0;       ///< (ħ²/2μ)(l+(D−1)/2)(l+(D−3)/2)
  double Lambda = 0;   ///< 2l+D−2
  double nu = 0;       ///< l+(D−1)/2
  double lambda2 = 0;  ///< (l+(D−1)/2)(l+(D−3)/2) = 2μL²/ħ²
  /// √lambda2; NaN when lambda2 < 0 (D = 2, l = 0).
  double lambda_dimless = 0;
  /// False for D = 2, l = 0 where ν = 1/2 < 1 and L² < 0.
  bool within_validity = true;
};

DerivedParams derive_params(const PhysicalParams& p, QuantumNumbers q);

/// ν from the Riccati root (1 + √(1 + 8μL²/ħ²))/2. Requires L² ≥ 0.
double nu_from_L2(const PhysicalParams& p, const DerivedParams& dp);

/// e^{−αr}/(1−e^{−αr}) evaluated as 1/expm1(αr).
double screening_factor(double alpha, double r);

double hulthen_V(const PhysicalParams& p, double r);

/// α²(c₀ + e^{−αr}/(1−e^{−αr})²), the exponential stand-in for 1/r².
double centrifugal_approx(double alpha, double c0, double r);

/// Effective radial potential; the approx mode replaces 1/r² by centrifugal_approx.
double effective_V(const PhysicalParams& p, QuantumNumbers q, double r, CentrifugalMode mode);

/// Coefficient ħ²(Λ²−1)/(8μ) of the centrifugal term.
double centrifugal_strength(const PhysicalParams& p, QuantumNumbers q);

/// Tail exponent ε̃_{n,l} = κ/(n+ν) − (n+ν)/2; positive iff the state is bound.
double epsilon_tilde(const PhysicalParams& p, QuantumNumbers q);

}  // namespace hulthen

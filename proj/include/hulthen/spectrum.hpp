#pragma once

#include "hulthen/model.hpp"

namespace hulthen {

/// c0_improved: any c₀ > 0 (1/12 by default). c0_zero: the usual approximation.
enum class ApproxMode { c0_improved, c0_zero };

const char* to_string(ApproxMode mode);

struct EnergyLevel {
  int n = 0;
  int l = 0;
  int D = 3;
  double energy = 0;
  double eps_tilde = 0;
  ApproxMode mode = ApproxMode::c0_improved;
  bool bound = false;
  /// False for D = 2, l = 0, outside the ν ≥ 1 range the closed forms assume.
  bool within_validity = true;
};

/// Closed-form energy without the bound-state check.
double energy_formula(const PhysicalParams& p, QuantumNumbers q);

/// Closed-form level with flags filled in; never throws NotBound.
EnergyLevel evaluate_level(const PhysicalParams& p, QuantumNumbers q);

/// Closed-form bound-state energy. Throws NotBound when ε̃ ≤ 0.
EnergyLevel energy_level(const PhysicalParams& p, QuantumNumbers q);

/// Screening at which the c₀ = 0 level reaches zero energy:
/// 2μZe²/(ħ²(n+l+(D−1)/2)²).
double critical_alpha(const PhysicalParams& p, QuantumNumbers q);

/// Number of n ≥ 0 with n + ν < √(2κ).
int count_bound_states(const PhysicalParams& p, int l);

/// −μZ²e⁴/(2ħ²(n+l+(D−1)/2)²), the unscreened D-dimensional Coulomb level.
double coulomb_energy(const PhysicalParams& p, QuantumNumbers q);

struct DegeneracyPartner {
  QuantumNumbers q;
  int D = 3;
};

/// (n, l, D) → (n, l + direction, D − 2·direction). Throws OutOfRange when
/// the image leaves l ≥ 0, D ≥ 2.
DegeneracyPartner degeneracy_partner(QuantumNumbers q, int D, int direction);

}  // namespace hulthen

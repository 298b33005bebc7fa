#pragma once

#include "hulthen/model.hpp"

namespace hulthen {

/// z = e^{−αr}/(1−e^{−αr}); maps r ∈ (0, ∞) onto z ∈ (∞, 0).
double transform_z(double alpha, double r);
/// r = ln(1 + 1/z)/α.
double inverse_z(double alpha, double z);
/// dz/dr = −αz(1+z).
double dz_dr(double alpha, double z);

/// Classical turning points of the approximated effective potential. z
/// decreases with r, so zA pairs with rB and zB with rA.
struct TurningPoints {
  double zA = 0;
  double zB = 0;
  double rA = 0;
  double rB = 0;
};

/// Roots of b z² + (b − a) z + b c₀ = E. Throws CentrifugalFree when b = 0,
/// DomainError when b < 0, NoClassicalRegion when the discriminant is negative.
TurningPoints turning_points(const PhysicalParams& p, const DerivedParams& dp, double E);

/// k(z) = (√(2μb)/ħ)·√((zB − z)(z − zA)) on [zA, zB].
double momentum_k(const PhysicalParams& p, const DerivedParams& dp, const TurningPoints& tp,
                  double z);
/// dk/dz on the open interval (zA, zB).
double momentum_dk_dz(const PhysicalParams& p, const DerivedParams& dp, const TurningPoints& tp,
                      double z);

/// Ground-state logarithmic derivative φ₀(z) = c1·z + c2, linear in z.
struct GroundLogDeriv {
  double alpha = 0;
  double c1 = 0;  ///< να
  double c2 = 0;  ///< −α·ε̃₀
  double shifted_energy = 0;  ///< Ẽ₀ = E₀ − b c₀
  double energy = 0;          ///< E₀

  double operator()(double z) const { return c1 * z + c2; }
  /// dφ₀/dr = −α c1 z(1+z).
  double derivative_r(double z) const { return -alpha * c1 * z * (1.0 + z); }
};

GroundLogDeriv ground_phi(const PhysicalParams& p, const DerivedParams& dp);

/// Residual of the ground-state Riccati equation written in z.
double ground_riccati_residual(const PhysicalParams& p, const DerivedParams& dp,
                               const GroundLogDeriv& phi, double z);

enum class Method { closed, quadrature };

/// Quantum correction q with Q_c = πq, from the ground state of angular
/// momentum `l`. Closed form: ν − 1 − λ.
double quantum_correction(const PhysicalParams& p, int l, Method method);

/// λ + ν − 1, an alternative closed form with the opposite sign on λ.
/// Kept for comparison only; it does not match the integral it names.
double quantum_correction_printed(const PhysicalParams& p, int l);

/// Classical action ∫k dr between the turning points at energy E (positive).
/// Closed form: π(√(t² + 2κ) − t − λ) with t² = λ²c₀ − E/(ħ²α²/2μ).
/// The quadrature route integrates k(z)/(αz(1+z)) over [zA, zB].
double momentum_integral(const PhysicalParams& p, int l, double E, Method method);

/// Same action integrated directly in r with k(r) = √(2μ(E − V_eff(r)))/ħ.
double momentum_integral_r(const PhysicalParams& p, int l, double E);

/// f(E) = λ(s₂ − s₁) − (n + ν), evaluated in scaled form so b = 0 is regular.
/// Increasing in E on (V_min, b c₀].
double quantization_residual(const PhysicalParams& p, QuantumNumbers q, double E);

/// Root of quantization_residual by bisection between the well minimum and
/// the continuum threshold b c₀. Throws NoRoot when the state is unbound.
double solve_quantization(const PhysicalParams& p, QuantumNumbers q);

/// Two-turning-point integrals with closed forms.
enum class AppendixId { A1, A2, A3, A4, A5 };

AppendixId appendix_id_from_string(const char* name);
const char* to_string(AppendixId id);

/// Closed-form value. `a`, `b` are used only by A5.
double appendix_integral(AppendixId id, double rA, double rB, double a = 0, double b = 0);
/// Left-hand-side integrand at r ∈ (rA, rB).
double appendix_integrand(AppendixId id, double r, double rA, double rB, double a = 0,
                          double b = 0);
/// Adaptive quadrature of the left-hand side after r = rA + (rB − rA) sin²θ.
double appendix_quadrature(AppendixId id, double rA, double rB, double a = 0, double b = 0);

}  // namespace hulthen

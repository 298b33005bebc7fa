#include "hulthen/model.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace hulthen {

PhysicalParams PhysicalParams::paper_units(double alpha, int D, double c0) {
  PhysicalParams p;
  p.alpha = alpha;
  p.Z = 1.0;
  p.mu = 0.5;
  p.hbar = 1.0;
  p.e2 = 1.0;
  p.D = D;
  p.c0 = c0;
  return p;
}

void PhysicalParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw InvalidParams(std::string(name) + " must be a finite positive number");
    }
  };
  positive(alpha, "alpha");
  positive(Z, "Z");
  positive(mu, "mu");
  positive(hbar, "hbar");
  positive(e2, "e2");
  if (D < 2) throw InvalidParams("D must be an integer >= 2");
  if (!(c0 >= 0.0) || !std::isfinite(c0)) throw InvalidParams("c0 must be >= 0");
}

double PhysicalParams::coupling() const { return mu * Z * e2 / (hbar * hbar * alpha); }

double PhysicalParams::energy_unit() const { return hbar * hbar * alpha * alpha / (2.0 * mu); }

void QuantumNumbers::validate() const {
  if (n < 0 || l < 0) throw InvalidParams("quantum numbers n and l must be >= 0");
}

DerivedParams derive_params(const PhysicalParams& p, QuantumNumbers q) {
  DerivedParams dp;
  const double upper = q.l + 0.5 * (p.D - 1);
  const double lower = q.l + 0.5 * (p.D - 3);
  dp.lambda2 = upper * lower;
  dp.L2 = p.hbar * p.hbar / (2.0 * p.mu) * dp.lambda2;
  dp.a = p.Z * p.e2 * p.alpha;
  dp.b = p.alpha * p.alpha * dp.L2;
  dp.Lambda = 2.0 * q.l + p.D - 2.0;
  dp.nu = upper;
  dp.lambda_dimless =
      dp.lambda2 >= 0.0 ? std::sqrt(dp.lambda2) : std::numeric_limits<double>::quiet_NaN();
  dp.within_validity = dp.nu >= 1.0;
  return dp;
}

double nu_from_L2(const PhysicalParams& p, const DerivedParams& dp) {
  if (dp.L2 < 0.0) throw DomainError("nu_from_L2 requires L2 >= 0");
  return 0.5 + 0.5 * std::sqrt(1.0 + 8.0 * p.mu * dp.L2 / (p.hbar * p.hbar));
}

double screening_factor(double alpha, double r) {
  if (!(r > 0.0)) throw DomainError("r must be positive");
  return 1.0 / std::expm1(alpha * r);
}

double hulthen_V(const PhysicalParams& p, double r) {
  return -p.Z * p.e2 * p.alpha * screening_factor(p.alpha, r);
}

double centrifugal_approx(double alpha, double c0, double r) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  const double z = screening_factor(alpha, r);
  // e^{-x}/(1-e^{-x})^2 = z(1+z)
  return alpha * alpha * (c0 + z * (1.0 + z));
}

double centrifugal_strength(const PhysicalParams& p, QuantumNumbers q) {
  const double Lambda = 2.0 * q.l + p.D - 2.0;
  return p.hbar * p.hbar * (Lambda * Lambda - 1.0) / (8.0 * p.mu);
}

double effective_V(const PhysicalParams& p, QuantumNumbers q, double r, CentrifugalMode mode) {
  const double inv_r2 =
      mode == CentrifugalMode::exact ? 1.0 / (r * r) : centrifugal_approx(p.alpha, p.c0, r);
  return hulthen_V(p, r) + centrifugal_strength(p, q) * inv_r2;
}

double epsilon_tilde(const PhysicalParams& p, QuantumNumbers q) {
  const double shifted = q.n + q.l + 0.5 * (p.D - 1);
  return p.coupling() / shifted - 0.5 * shifted;
}

}  // namespace hulthen

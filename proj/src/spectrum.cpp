#include "hulthen/spectrum.hpp"

#include <cmath>
#include <string>

namespace hulthen {

const char* to_string(ApproxMode mode) {
  return mode == ApproxMode::c0_zero ? "c0_zero" : "c0_improved";
}

double energy_formula(const PhysicalParams& p, QuantumNumbers q) {
  const double upper = q.l + 0.5 * (p.D - 1);
  const double lower = q.l + 0.5 * (p.D - 3);
  const double shifted = q.n + upper;
  const double bracket = p.coupling() / shifted - 0.5 * shifted;
  return p.energy_unit() * (upper * lower * p.c0 - bracket * bracket);
}

EnergyLevel evaluate_level(const PhysicalParams& p, QuantumNumbers q) {
  p.validate();
  q.validate();
  EnergyLevel level;
  level.n = q.n;
  level.l = q.l;
  level.D = p.D;
  level.energy = energy_formula(p, q);
  level.eps_tilde = epsilon_tilde(p, q);
  level.mode = p.c0 == 0.0 ? ApproxMode::c0_zero : ApproxMode::c0_improved;
  level.bound = level.eps_tilde > 0.0;
  level.within_validity = !(p.D == 2 && q.l == 0);
  return level;
}

EnergyLevel energy_level(const PhysicalParams& p, QuantumNumbers q) {
  EnergyLevel level = evaluate_level(p, q);
  if (!level.bound) {
    throw NotBound("state (n=" + std::to_string(q.n) + ", l=" + std::to_string(q.l) +
                   ", D=" + std::to_string(p.D) + ") is not bound at this screening");
  }
  return level;
}

double critical_alpha(const PhysicalParams& p, QuantumNumbers q) {
  p.validate();
  q.validate();
  const double shifted = q.n + q.l + 0.5 * (p.D - 1);
  return 2.0 * p.mu * p.Z * p.e2 / (p.hbar * p.hbar * shifted * shifted);
}

int count_bound_states(const PhysicalParams& p, int l) {
  p.validate();
  if (l < 0) throw InvalidParams("l must be >= 0");
  const double limit = std::sqrt(2.0 * p.coupling());
  const double nu = l + 0.5 * (p.D - 1);
  int count = 0;
  // Strict inequality: ε̃ = 0 is not bound.
  while (count + nu < limit && epsilon_tilde(p, {count, l}) > 0.0) ++count;
  return count;
}

double coulomb_energy(const PhysicalParams& p, QuantumNumbers q) {
  const double shifted = q.n + q.l + 0.5 * (p.D - 1);
  return -p.mu * p.Z * p.Z * p.e2 * p.e2 / (2.0 * p.hbar * p.hbar * shifted * shifted);
}

DegeneracyPartner degeneracy_partner(QuantumNumbers q, int D, int direction) {
  if (direction != 1 && direction != -1) throw InvalidParams("direction must be +1 or -1");
  DegeneracyPartner out{{q.n, q.l + direction}, D - 2 * direction};
  if (out.q.l < 0 || out.D < 2) {
    throw OutOfRange("degeneracy partner (n=" + std::to_string(out.q.n) +
                     ", l=" + std::to_string(out.q.l) + ", D=" + std::to_string(out.D) +
                     ") is outside l >= 0, D >= 2");
  }
  return out;
}

}  // namespace hulthen

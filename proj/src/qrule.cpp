#include "hulthen/qrule.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <string>

#include "hulthen/quadrature.hpp"
#include "hulthen/spectrum.hpp"

namespace hulthen {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

QuadOptions tight() { return {1e-14, 1e-12, 4000}; }
// q can vanish exactly, so its target is absolute.
QuadOptions correction_tol() { return {1e-11, 1e-11, 4000}; }

// t² = λ²c₀ − E/ε_unit, the squared tail exponent belonging to energy E.
double scaled_t2(const PhysicalParams& p, const DerivedParams& dp, double E) {
  return dp.lambda2 * p.c0 - E / p.energy_unit();
}

void require_lambda(const DerivedParams& dp) {
  if (dp.lambda2 < 0.0) {
    throw DomainError("lambda^2 < 0 (D = 2, l = 0) is outside the validity of the quantization rule");
  }
}

}  // namespace

double transform_z(double alpha, double r) { return screening_factor(alpha, r); }

double inverse_z(double alpha, double z) {
  if (!(z > 0.0)) throw DomainError("z must be positive");
  return std::log1p(1.0 / z) / alpha;
}

double dz_dr(double alpha, double z) { return -alpha * z * (1.0 + z); }

TurningPoints turning_points(const PhysicalParams& p, const DerivedParams& dp, double E) {
  if (dp.b == 0.0) throw CentrifugalFree("b = 0: only one turning point in z");
  if (dp.b < 0.0) throw DomainError("b < 0: turning-point formulas need a repulsive centrifugal term");
  const double disc = (dp.a - dp.b) * (dp.a - dp.b) + 4.0 * dp.b * (E - dp.b * p.c0);
  if (disc < 0.0) throw NoClassicalRegion("energy lies below the minimum of the effective potential");
  const double root = std::sqrt(disc);
  TurningPoints tp;
  const double sum = dp.a / dp.b - 1.0;
  const double product = p.c0 - E / dp.b;
  if (dp.a - dp.b >= 0.0) {
    tp.zB = 0.5 * (dp.a - dp.b + root) / dp.b;
    tp.zA = tp.zB != 0.0 ? product / tp.zB : 0.5 * sum;
  } else {
    tp.zA = 0.5 * (dp.a - dp.b - root) / dp.b;
    tp.zB = tp.zA != 0.0 ? product / tp.zA : 0.5 * sum;
  }
  tp.rA = tp.zB > 0.0 ? inverse_z(p.alpha, tp.zB) : std::numeric_limits<double>::infinity();
  tp.rB = tp.zA > 0.0 ? inverse_z(p.alpha, tp.zA) : std::numeric_limits<double>::infinity();
  return tp;
}

double momentum_k(const PhysicalParams& p, const DerivedParams& dp, const TurningPoints& tp,
                  double z) {
  if (z < tp.zA || z > tp.zB) throw DomainError("momentum_k: z outside [zA, zB]");
  return std::sqrt(2.0 * p.mu * dp.b) / p.hbar * std::sqrt((tp.zB - z) * (z - tp.zA));
}

double momentum_dk_dz(const PhysicalParams& p, const DerivedParams& dp, const TurningPoints& tp,
                      double z) {
  if (!(z > tp.zA && z < tp.zB)) throw DomainError("momentum_dk_dz: z outside (zA, zB)");
  const double up = tp.zB - z;
  const double down = z - tp.zA;
  return std::sqrt(2.0 * p.mu * dp.b) / (2.0 * p.hbar) * (std::sqrt(up / down) - std::sqrt(down / up));
}

GroundLogDeriv ground_phi(const PhysicalParams& p, const DerivedParams& dp) {
  GroundLogDeriv g;
  const double eps0 = p.coupling() / dp.nu - 0.5 * dp.nu;
  g.alpha = p.alpha;
  g.c1 = dp.nu * p.alpha;
  g.c2 = -p.alpha * eps0;
  g.shifted_energy = -p.energy_unit() * eps0 * eps0;
  g.energy = g.shifted_energy + dp.b * p.c0;
  return g;
}

double ground_riccati_residual(const PhysicalParams& p, const DerivedParams& dp,
                               const GroundLogDeriv& phi, double z) {
  const double kinetic = 2.0 * p.mu / (p.hbar * p.hbar) *
                         (phi.energy - dp.b * z * z + (dp.a - dp.b) * z - dp.b * p.c0);
  const double value = phi(z);
  return -p.alpha * z * (z + 1.0) * phi.c1 + kinetic + value * value;
}

double quantum_correction(const PhysicalParams& p, int l, Method method) {
  p.validate();
  const DerivedParams dp = derive_params(p, {0, l});
  require_lambda(dp);
  if (method == Method::closed) return dp.nu - 1.0 - dp.lambda_dimless;

  const double t = p.coupling() / dp.nu - 0.5 * dp.nu;
  if (!(t > 0.0)) throw NotBound("quantum_correction: the ground state is not bound");
  const GroundLogDeriv phi = ground_phi(p, dp);
  const double alpha = p.alpha;
  // φ/φ' as a function of r, both sides of the ratio evaluated in r.
  auto phi_ratio = [&](double r) {
    const double z = transform_z(alpha, r);
    return phi(z) / phi.derivative_r(z);
  };

  double integral = 0.0;
  if (dp.b > 0.0) {
    const TurningPoints tp = turning_points(p, dp, phi.energy);
    const double scale = std::sqrt(2.0 * p.mu * dp.b) / p.hbar;
    // z = zA + (zB − zA) sin²θ: k'(r) dr = dk/dθ dθ = scale·(zA + zB − 2z) dθ, and θ
    // runs from rB (θ = 0) back to rA, hence the overall minus sign.
    auto integrand = [&](double theta) {
      const double s = std::sin(theta);
      const double z = tp.zA + (tp.zB - tp.zA) * s * s;
      const double r = inverse_z(alpha, z);
      return -scale * (tp.zA + tp.zB - 2.0 * z) * phi_ratio(r);
    };
    integral = adaptive_quad(integrand, 0.0, kHalfPi, correction_tol()).value;
  } else {
    // Single turning point: the classical region is (0, rB).
    const double zA = -phi.energy / dp.a;
    const double rB = inverse_z(alpha, zA);
    const double scale = std::sqrt(2.0 * p.mu * dp.a) / p.hbar;
    auto integrand = [&](double theta) {
      const double s = std::sin(theta);
      const double c = std::cos(theta);
      const double r = rB * s * s;
      if (!(r > 0.0)) return 0.0;
      const double z = transform_z(alpha, r);
      // z − zA without cancellation near rB.
      const double gap = std::exp(alpha * r) * std::expm1(alpha * rB * c * c) /
                         (std::expm1(alpha * r) * std::expm1(alpha * rB));
      if (!(gap > 0.0)) return 0.0;
      const double dk_dr = scale * dz_dr(alpha, z) / (2.0 * std::sqrt(gap));
      return dk_dr * phi_ratio(r) * 2.0 * rB * s * c;
    };
    integral = adaptive_quad(integrand, 0.0, kHalfPi, correction_tol()).value;
  }
  return integral / kPi;
}

double quantum_correction_printed(const PhysicalParams& p, int l) {
  const DerivedParams dp = derive_params(p, {0, l});
  require_lambda(dp);
  return dp.lambda_dimless + dp.nu - 1.0;
}

double momentum_integral(const PhysicalParams& p, int l, double E, Method method) {
  p.validate();
  const DerivedParams dp = derive_params(p, {0, l});
  require_lambda(dp);
  if (dp.b == 0.0 && !(E < 0.0)) throw NoClassicalRegion("E >= 0: classical region is unbounded");
  if (dp.b > 0.0) {
    // Validates E ≥ V_min.
    const TurningPoints tp = turning_points(p, dp, E);
    if (tp.zA < 0.0) throw NoClassicalRegion("E above the continuum threshold b*c0");
  }

  if (method == Method::closed) {
    const double t = std::sqrt(std::max(0.0, scaled_t2(p, dp, E)));
    return kPi * (std::sqrt(t * t + 2.0 * p.coupling()) - t - dp.lambda_dimless);
  }

  if (dp.b == 0.0) return momentum_integral_r(p, l, E);
  const TurningPoints tp = turning_points(p, dp, E);
  const double scale = std::sqrt(2.0 * p.mu * dp.b) / p.hbar;
  const double width = tp.zB - tp.zA;
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double z = tp.zA + width * s * s;
    const double k = scale * width * s * c;
    const double dz = 2.0 * width * s * c;
    return k * dz / (p.alpha * z * (1.0 + z));
  };
  return adaptive_quad(integrand, 0.0, kHalfPi, tight()).value;
}

double momentum_integral_r(const PhysicalParams& p, int l, double E) {
  p.validate();
  const DerivedParams dp = derive_params(p, {0, l});
  const QuantumNumbers q{0, l};
  const double prefactor = 2.0 * p.mu / (p.hbar * p.hbar);
  auto k_of_r = [&](double r) {
    const double gap = E - effective_V(p, q, r, CentrifugalMode::approx);
    return gap > 0.0 ? std::sqrt(prefactor * gap) : 0.0;
  };
  if (dp.b > 0.0) {
    const TurningPoints tp = turning_points(p, dp, E);
    if (!std::isfinite(tp.rB)) throw NoClassicalRegion("classical region is unbounded");
    const double width = tp.rB - tp.rA;
    auto integrand = [&](double theta) {
      const double s = std::sin(theta);
      const double c = std::cos(theta);
      return k_of_r(tp.rA + width * s * s) * 2.0 * width * s * c;
    };
    return adaptive_quad(integrand, 0.0, kHalfPi, tight()).value;
  }
  if (dp.b < 0.0) throw DomainError("momentum_integral_r: b < 0 is outside validity");
  if (!(E < 0.0)) throw NoClassicalRegion("E >= 0: classical region is unbounded");
  const double rB = inverse_z(p.alpha, -E / dp.a);
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double r = rB * s * s;
    if (!(r > 0.0)) return 0.0;
    return k_of_r(r) * 2.0 * rB * s * c;
  };
  return adaptive_quad(integrand, 0.0, kHalfPi, tight()).value;
}

double quantization_residual(const PhysicalParams& p, QuantumNumbers q, double E) {
  const DerivedParams dp = derive_params(p, q);
  const double t2 = std::max(0.0, scaled_t2(p, dp, E));
  return std::sqrt(t2 + 2.0 * p.coupling()) - std::sqrt(t2) - (q.n + dp.nu);
}

double solve_quantization(const PhysicalParams& p, QuantumNumbers q) {
  p.validate();
  q.validate();
  if (!(epsilon_tilde(p, q) > 0.0)) {
    throw NoRoot("solve_quantization: no bound state for (n=" + std::to_string(q.n) +
                 ", l=" + std::to_string(q.l) + ", D=" + std::to_string(p.D) + ")");
  }
  const DerivedParams dp = derive_params(p, q);
  if (dp.b == 0.0) {
    // Centrifugal-free s-wave in three dimensions.
    const double shifted = q.n + 1.0;
    const double bracket = p.coupling() / shifted - 0.5 * shifted;
    return -p.energy_unit() * bracket * bracket;
  }

  auto f = [&](double E) { return quantization_residual(p, q, E); };
  double hi = dp.b * p.c0;
  double lo = 0.0;
  if (dp.b > 0.0) {
    if (!(dp.a > dp.b)) throw NoRoot("solve_quantization: effective potential has no well");
    lo = hi - (dp.a - dp.b) * (dp.a - dp.b) / (4.0 * dp.b);
  } else {
    double step = p.energy_unit();
    lo = hi - step;
    for (int i = 0; f(lo) >= 0.0; ++i) {
      if (i > 200) throw NoRoot("solve_quantization: could not bracket the root");
      step *= 2.0;
      lo = hi - step;
    }
  }
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) throw NoRoot("solve_quantization: root is not bracketed");
  for (int iter = 0; iter < 4000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;  // one ULP
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (f_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

AppendixId appendix_id_from_string(const char* name) {
  static constexpr const char* kNames[] = {"A1", "A2", "A3", "A4", "A5"};
  for (int i = 0; i < 5; ++i) {
    if (std::strcmp(name, kNames[i]) == 0) return static_cast<AppendixId>(i);
  }
  throw InvalidParams(std::string("unknown appendix integral ") + name);
}

const char* to_string(AppendixId id) {
  static constexpr const char* kNames[] = {"A1", "A2", "A3", "A4", "A5"};
  return kNames[static_cast<int>(id)];
}

namespace {

void check_appendix_domain(AppendixId id, double rA, double rB, double a, double b) {
  if (!(rA > 0.0 && rB > rA)) throw DomainError("appendix integrals need 0 < rA < rB");
  if (id == AppendixId::A5 && !(a + b * rA > 0.0 && a + b * rB > 0.0)) {
    throw DomainError("A5 needs a + b r > 0 on [rA, rB]");
  }
}

}  // namespace

double appendix_integral(AppendixId id, double rA, double rB, double a, double b) {
  check_appendix_domain(id, rA, rB, a, b);
  switch (id) {
    case AppendixId::A1:
      return 0.5 * kPi * (rA + rB);
    case AppendixId::A2:
      return kPi / std::sqrt(rA * rB);
    case AppendixId::A3:
      return kPi;
    case AppendixId::A4:
      return kPi * (0.5 * (rA + rB) - std::sqrt(rA * rB));
    case AppendixId::A5:
      return kPi / std::sqrt((a + b * rA) * (a + b * rB));
  }
  throw InvalidParams("unknown appendix integral");
}

namespace {

// Integrand with the distances to both turning points supplied separately, so
// callers near an endpoint avoid the cancellation in r − rA.
double appendix_integrand_gaps(AppendixId id, double r, double gap_a, double gap_b, double a,
                               double b) {
  const double root = std::sqrt(gap_a * gap_b);
  switch (id) {
    case AppendixId::A1:
      return r / root;
    case AppendixId::A2:
      return 1.0 / (r * root);
    case AppendixId::A3:
      return 1.0 / root;
    case AppendixId::A4:
      return root / r;
    case AppendixId::A5:
      return 1.0 / ((a + b * r) * root);
  }
  throw InvalidParams("unknown appendix integral");
}

}  // namespace

double appendix_integrand(AppendixId id, double r, double rA, double rB, double a, double b) {
  return appendix_integrand_gaps(id, r, r - rA, rB - r, a, b);
}

double appendix_quadrature(AppendixId id, double rA, double rB, double a, double b) {
  check_appendix_domain(id, rA, rB, a, b);
  const double width = rB - rA;
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double r = rA + width * s * s;
    return appendix_integrand_gaps(id, r, width * s * s, width * c * c, a, b) * 2.0 * width * s * c;
  };
  return adaptive_quad(integrand, 0.0, kHalfPi, tight()).value;
}

}  // namespace hulthen

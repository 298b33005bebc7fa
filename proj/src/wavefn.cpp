#include "hulthen/wavefn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hulthen/quadrature.hpp"
#include "hulthen/spectrum.hpp"

namespace hulthen {
namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// log Γ(x) for x > 0.
double log_gamma(double x) {
  if (is_nonpositive_integer(x)) throw ParameterPole("Gamma function pole at " + std::to_string(x));
  if (!(x > 0.0)) throw DomainError("Gamma function is only used at positive arguments");
  return std::lgamma(x);
}

struct Profile {
  double y;
  double one_minus_y;
};

Profile profile(double alpha, double r) {
  if (!(r > 0.0)) throw DomainError("r must be positive");
  return {std::exp(-alpha * r), -std::expm1(-alpha * r)};
}

}  // namespace

double pochhammer(double y, int k) {
  if (k < 0) throw DomainError("pochhammer needs k >= 0");
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= y + i;
  return out;
}

std::vector<double> hyp2f1_coefficients(int n, double B, double C) {
  if (n < 0) throw DomainError("hyp2f1_truncated needs A = -n with n >= 0");
  if (is_nonpositive_integer(C)) throw InvalidC("C must not be a nonpositive integer");
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1.0;
  for (int k = 0; k < n; ++k) {
    c[k + 1] = c[k] * (k - n) * (B + k) / ((C + k) * (k + 1.0));
  }
  return c;
}

double hyp2f1_truncated(int n, double B, double C, double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw DomainError("hyp2f1_truncated needs y in [0, 1]");
  const std::vector<double> coeffs = hyp2f1_coefficients(n, B, C);

  // F(−n, n+a+b+1; a+1; y) = n!/(a+1)_n P_n^(a,b)(1−2y). The forward Jacobi
  // recurrence avoids the cancellation of the power series for mid-range y.
  const double a = C - 1.0;
  const double b = B - n - C;
  bool recurrence_ok = n >= 2 && a > -1.0 && b > -1.0;
  for (int k = 2; recurrence_ok && k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    recurrence_ok = std::abs(k + a + b) > 1e-8 && std::abs(s - 2.0) > 1e-8;
  }
  if (recurrence_ok) {
    const double x = 1.0 - 2.0 * y;
    double prev = 1.0;
    double cur = (a + 1.0) + (a + b + 2.0) * 0.5 * (x - 1.0);
    for (int k = 2; k <= n; ++k) {
      const double s = 2.0 * k + a + b;
      const double next = ((s - 1.0) * (s * (s - 2.0) * x + a * a - b * b) * cur -
                           2.0 * (k + a - 1.0) * (k + b - 1.0) * s * prev) /
                          (2.0 * k * (k + a + b) * (s - 2.0));
      prev = cur;
      cur = next;
    }
    double scale = 1.0;
    for (int k = 1; k <= n; ++k) scale *= k / (a + k);
    return scale * cur;
  }

  double sum = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) sum = sum * y + *it;
  return sum;
}

double jacobi_P(int n, double A, double B, double x) {
  if (n < 0) throw DomainError("jacobi_P needs n >= 0");
  // Γ poles in the explicit sum.
  for (int k = 0; k <= n; ++k) {
    if (is_nonpositive_integer(A + k + 1.0) || is_nonpositive_integer(B + k + 1.0)) {
      throw ParameterPole("Gamma function pole in jacobi_P");
    }
  }
  // The alternating sum cancels for larger n; extended precision absorbs it.
  using wide = long double;
  const wide minus = 0.5L * (static_cast<wide>(x) - 1.0L);
  const wide plus = 0.5L * (static_cast<wide>(x) + 1.0L);
  // c_p = Γ(n+A+1)Γ(n+B+1) / (p! Γ(n+A−p+1) Γ(B+p+1) (n−p)!), built by ratios from
  // c_0 = (B+1)_n / n!.
  wide coeff = 1.0L;
  for (int k = 1; k <= n; ++k) coeff *= (static_cast<wide>(B) + k) / k;
  wide sum = 0.0L;
  for (int p = 0; p <= n; ++p) {
    sum += coeff * std::pow(minus, n - p) * std::pow(plus, p);
    coeff *= (static_cast<wide>(A) + n - p) * (n - p) / ((p + 1.0L) * (static_cast<wide>(B) + p + 1.0L));
  }
  return static_cast<double>(sum);
}

RadialWavefunction RadialWavefunction::build(const PhysicalParams& p, QuantumNumbers q,
                                             Normalization normalization) {
  p.validate();
  q.validate();
  const EnergyLevel level = energy_level(p, q);
  RadialWavefunction wf;
  wf.n = q.n;
  wf.l = q.l;
  wf.D = p.D;
  wf.alpha = p.alpha;
  wf.eps_tilde = level.eps_tilde;
  wf.nu = q.l + 0.5 * (p.D - 1);
  wf.energy = level.energy;
  wf.coeffs = hyp2f1_coefficients(q.n, q.n + 2.0 * (wf.eps_tilde + wf.nu), 1.0 + 2.0 * wf.eps_tilde);
  wf.normalization = normalization;
  switch (normalization) {
    case Normalization::none:
      wf.norm = 1.0;
      break;
    case Normalization::closed:
      wf.norm = normalization_closed(p, q);
      break;
    case Normalization::numeric:
      wf.norm = normalization_numeric(p, q);
      break;
  }
  return wf;
}

double RadialWavefunction::operator()(double r) const {
  const Profile pr = profile(alpha, r);
  return norm * std::exp(-alpha * eps_tilde * r) * std::pow(pr.one_minus_y, nu) * polynomial(pr.y);
}

double RadialWavefunction::polynomial(double y) const {
  double sum = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) sum = sum * y + *it;
  return sum;
}

double RadialWavefunction::polynomial_d1(double y) const {
  double sum = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 1;) sum = sum * y + static_cast<double>(k) * coeffs[k];
  return sum;
}

double RadialWavefunction::polynomial_d2(double y) const {
  double sum = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 2;) {
    sum = sum * y + static_cast<double>(k * (k - 1)) * coeffs[k];
  }
  return sum;
}

double RadialWavefunction::polynomial_magnitude(double y) const {
  double sum = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) sum = sum * y + std::abs(*it);
  return sum;
}

double RadialWavefunction::polynomial_via_jacobi(double y) const {
  const double A = 2.0 * eps_tilde;
  const double B = 2.0 * nu - 1.0;
  const double factor =
      std::exp(std::lgamma(n + 1.0) + log_gamma(1.0 + A) - log_gamma(n + 1.0 + A));
  return factor * jacobi_P(n, A, B, 1.0 - 2.0 * y);
}

double radial_R(const PhysicalParams& p, QuantumNumbers q, double r, bool normalized) {
  const auto wf =
      RadialWavefunction::build(p, q, normalized ? Normalization::closed : Normalization::none);
  return wf(r);
}

double normalization_closed(const PhysicalParams& p, QuantumNumbers q) {
  const EnergyLevel level = energy_level(p, q);
  const int n = q.n;
  const double t2 = 2.0 * level.eps_tilde;  // Jacobi parameter A
  const double two_nu = 2.0 * q.l + p.D - 1.0;
  const double beta = two_nu - 1.0;  // Jacobi parameter B

  // ₂F₁ = n!Γ(1+A)/Γ(n+1+A)·P_n^{(A,B)}(1−2y); P expands into (−y)^{n−p}(1−y)^p
  // and each product of two terms integrates to a Beta function.
  const double log_front = 2.0 * (std::lgamma(n + 1.0) + log_gamma(1.0 + t2) + log_gamma(n + beta + 1.0));
  const double log_total = log_gamma(t2 + 2.0 * n + two_nu + 1.0);
  std::vector<double> log_g(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    log_g[k] = std::lgamma(k + 1.0) + log_gamma(t2 + n - k + 1.0) + std::lgamma(n - k + 1.0) +
               log_gamma(beta + k + 1.0);
  }
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double log_term = log_front - log_g[i] - log_g[j] + log_gamma(t2 + 2.0 * n - i - j) +
                              log_gamma(two_nu + i + j + 1.0) - log_total;
      sum += ((i + j) % 2 == 0 ? 1.0 : -1.0) * std::exp(log_term);
    }
  }
  if (!(sum > 0.0)) throw ConvergenceFailure("normalization_closed: non-positive norm integral");
  return std::sqrt(p.alpha / sum);
}

double normalization_printed(const PhysicalParams& p, QuantumNumbers q) {
  const EnergyLevel level = energy_level(p, q);
  const int n = q.n;
  const int l = q.l;
  const int D = p.D;
  const double e2 = 2.0 * level.eps_tilde;
  auto f = [&](int k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    return sign * std::tgamma(k + 1.0) * std::tgamma(e2 + n - k + 1.0) *
           std::tgamma(2.0 * l + k + D - 1.0) * std::tgamma(n + k + 1.0);
  };
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      sum += 1.0 / (f(i) * f(j) * std::tgamma(2.0 * l + i + j + D));
    }
  }
  const double front = 1.0 / (std::tgamma(n + 2.0 * l + D - 1.0) * std::tgamma(e2 + n + 1.0));
  return front * std::sqrt(p.alpha * std::tgamma(e2 + 2.0 * n + 2.0 * l + D + 1.0) /
                           (std::tgamma(e2 + 2.0 * n + 1.0) * sum));
}

namespace {

// ∫₀¹ y^{s−1}(1−y)^{2ν} F₁(y)F₂(y) dy with y = u^k, k chosen so the power of u
// is at least one and the integrand stays smooth at the origin.
double y_integral(const RadialWavefunction& first, const RadialWavefunction& second, double s,
                  double abs_tol = 1e-300) {
  const double k = std::max(1.0, 2.0 / s);
  const double two_nu = 2.0 * first.nu;
  auto integrand = [&](double u) {
    if (!(u > 0.0)) return 0.0;
    const double y = std::pow(u, k);
    return k * std::pow(u, k * s - 1.0) * std::pow(1.0 - y, two_nu) * first.polynomial(y) *
           second.polynomial(y);
  };
  return adaptive_quad(integrand, 0.0, 1.0, {abs_tol, 1e-12, 8000}).value;
}

}  // namespace

double normalization_numeric(const PhysicalParams& p, QuantumNumbers q) {
  const auto wf = RadialWavefunction::build(p, q, Normalization::none);
  const double integral = y_integral(wf, wf, 2.0 * wf.eps_tilde) / p.alpha;
  return 1.0 / std::sqrt(integral);
}

double overlap(const PhysicalParams& p, QuantumNumbers first, QuantumNumbers second) {
  if (first.l != second.l) throw InvalidParams("overlap: states must share l");
  const auto a = RadialWavefunction::build(p, first, Normalization::numeric);
  const auto b = RadialWavefunction::build(p, second, Normalization::numeric);
  // Orthogonal pairs integrate to zero, so the target is absolute in the normalized result.
  const double scale = a.norm * b.norm / p.alpha;
  return scale * y_integral(a, b, a.eps_tilde + b.eps_tilde, 1e-13 / scale);
}

NodeScan count_nodes(const PhysicalParams& p, QuantumNumbers q, int initial_points) {
  if (initial_points < 2) throw InvalidParams("count_nodes needs at least two scan points");
  const auto wf = RadialWavefunction::build(p, q, Normalization::none);
  // The prefactor y^ε̃(1−y)^ν is positive, so sign(R) = sign(F(y)).
  auto sign_at = [&](double r) {
    const double value = wf.polynomial(std::exp(-p.alpha * r));
    return (value > 0.0) - (value < 0.0);
  };
  const double log_lo = std::log(1e-8 / p.alpha);
  const double log_hi = std::log(60.0 / p.alpha);

  auto scan = [&](int points) {
    std::vector<std::pair<double, double>> brackets;
    int previous = 0;
    double previous_r = 0.0;
    for (int i = 0; i < points; ++i) {
      const double r = std::exp(log_lo + (log_hi - log_lo) * i / (points - 1));
      const int s = sign_at(r);
      if (s == 0) continue;
      if (previous != 0 && s != previous) brackets.emplace_back(previous_r, r);
      previous = s;
      previous_r = r;
    }
    return brackets;
  };

  int points = initial_points;
  auto brackets = scan(points);
  int stable = 0;
  constexpr int kMaxPoints = 1 << 22;
  while (stable < 2) {
    if (points > kMaxPoints / 2) throw GridTooCoarse("count_nodes: node count did not stabilize");
    points *= 2;
    auto refined = scan(points);
    stable = refined.size() == brackets.size() ? stable + 1 : 0;
    brackets = std::move(refined);
  }

  NodeScan out;
  out.count = static_cast<int>(brackets.size());
  out.points = points;
  for (auto [lo, hi] : brackets) {
    const int s_lo = sign_at(lo);
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (!(mid > lo && mid < hi)) break;
      if (sign_at(mid) == s_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    out.nodes.push_back(0.5 * (lo + hi));
  }
  return out;
}

double riccati_residual(const PhysicalParams& p, QuantumNumbers q, double r, CentrifugalMode mode) {
  const auto wf = RadialWavefunction::build(p, q, Normalization::none);
  const Profile pr = profile(p.alpha, r);
  const double F = wf.polynomial(pr.y);
  if (std::abs(F) < 1e-6 * wf.polynomial_magnitude(pr.y)) {
    throw NodeProximity("riccati_residual: r is too close to a node of R");
  }
  const double F1 = wf.polynomial_d1(pr.y) / F;
  const double F2 = wf.polynomial_d2(pr.y) / F;
  // g = d ln R / dy, φ = −αy g, φ' = α²y(g + y g').
  const double g = wf.eps_tilde / pr.y - wf.nu / pr.one_minus_y + F1;
  const double dg = -wf.eps_tilde / (pr.y * pr.y) - wf.nu / (pr.one_minus_y * pr.one_minus_y) +
                    F2 - F1 * F1;
  const double phi = -p.alpha * pr.y * g;
  const double dphi = p.alpha * p.alpha * pr.y * (g + pr.y * dg);
  const double kinetic = 2.0 * p.mu / (p.hbar * p.hbar) * (wf.energy - effective_V(p, q, r, mode));
  return std::abs(dphi + phi * phi + kinetic);
}

}  // namespace hulthen

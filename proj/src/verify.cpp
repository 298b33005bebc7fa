#include "hulthen/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "hulthen/errors.hpp"
#include "hulthen/qrule.hpp"
#include "hulthen/spectrum.hpp"
#include "hulthen/wavefn.hpp"

namespace hulthen {
namespace {

PhysicalParams params_for(const VerifyOptions& o, double alpha, int D) {
  return PhysicalParams::paper_units(alpha, D, o.c0);
}

class Recorder {
 public:
  Recorder(std::string name, std::string metric, double tolerance) {
    result_.name = std::move(name);
    result_.metric = std::move(metric);
    result_.tolerance = tolerance;
  }

  void record(double error, const std::string& where) { record(error, where, result_.tolerance); }

  /// Check held to its own bound, tighter than the suite default.
  void record(double error, const std::string& where, double tolerance) {
    ++result_.checks;
    result_.max_error = std::max(result_.max_error, std::isnan(error) ? std::numeric_limits<double>::infinity() : error);
    if (!(error <= tolerance)) {
      if (result_.failures == 0) result_.first_failure = where;
      ++result_.failures;
    }
  }

  void fail(const std::string& where) {
    ++result_.checks;
    if (result_.failures == 0) result_.first_failure = where;
    ++result_.failures;
  }

  void skip() { ++result_.skipped; }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string tag(double alpha, int D, int n, int l) {
  std::ostringstream s;
  s << "alpha=" << alpha << " D=" << D << " n=" << n << " l=" << l;
  return s.str();
}

double rel(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

// Calls visit(p, n, l) for every bound tuple of the grid.
void for_each_bound(const VerifyOptions& o, const std::function<void(const PhysicalParams&, int, int)>& visit) {
  for (double alpha : o.alphas) {
    for (int D : o.dims) {
      const PhysicalParams p = params_for(o, alpha, D);
      for (int l = 0; l <= o.l_max; ++l) {
        for (int n = 0; n <= o.n_max; ++n) {
          if (epsilon_tilde(p, {n, l}) > 0.0) visit(p, n, l);
        }
      }
    }
  }
}

SuiteResult suite_vieta(const VerifyOptions& o) {
  Recorder rec("vieta", "max relative deviation of zA+zB and zA*zB", 1e-12);
  for_each_bound(o, [&](const PhysicalParams& p, int n, int l) {
    const DerivedParams dp = derive_params(p, {n, l});
    if (!(dp.b > 0.0)) {
      rec.skip();
      return;
    }
    const double E = energy_formula(p, {n, l});
    const TurningPoints tp = turning_points(p, dp, E);
    const double sum_err = rel(tp.zA + tp.zB, dp.a / dp.b - 1.0);
    const double prod_err = rel(tp.zA * tp.zB, p.c0 - E / dp.b);
    rec.record(std::max(sum_err, prod_err), tag(p.alpha, p.D, n, l));
  });
  return rec.take();
}

SuiteResult suite_riccati(const VerifyOptions& o) {
  Recorder rec("riccati", "max |Riccati residual| (ground z form relative to max(1, phi^2) at 1e-12; R(r) absolute at 1e-8)",
               1e-8);
  for_each_bound(o, [&](const PhysicalParams& p, int n, int l) {
    const std::string where = tag(p.alpha, p.D, n, l);
    if (n == 0) {
      const DerivedParams dp = derive_params(p, {0, l});
      const GroundLogDeriv phi = ground_phi(p, dp);
      double worst = 0.0;
      for (int i = 0; i <= 50; ++i) {
        const double z = std::pow(10.0, -3.0 + 5.0 * i / 50.0);
        const double scale = std::max(1.0, phi(z) * phi(z));
        worst = std::max(worst, std::abs(ground_riccati_residual(p, dp, phi, z)) / scale);
      }
      rec.record(worst, where + " (ground, z form)", 1e-12);
    }
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double r = 0.1 * std::pow(500.0, i / 100.0);
      try {
        worst = std::max(worst, riccati_residual(p, {n, l}, r));
      } catch (const NodeProximity&) {
      }
    }
    rec.record(worst, where);
  });
  return rec.take();
}

SuiteResult suite_jacobi(const VerifyOptions& o) {
  Recorder rec("jacobi", "max |P - Gamma ratio * 2F1| / max(1, |P|)", 1e-12);
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> param(0.0, 5.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n = 0; n <= 10; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const double A = param(rng);
      const double B = param(rng);
      const double x = unit(rng);
      const double lhs = jacobi_P(n, A, B, 1.0 - 2.0 * x);
      const double factor = pochhammer(A + 1.0, n) / std::tgamma(n + 1.0);
      const double rhs = factor * hyp2f1_truncated(n, n + A + B + 1.0, A + 1.0, x);
      std::ostringstream where;
      where << "n=" << n << " A=" << A << " B=" << B << " x=" << x;
      rec.record(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), where.str());
    }
  }
  return rec.take();
}

SuiteResult suite_qcorr(const VerifyOptions& o) {
  Recorder rec("qcorr", "max |q_closed - q_quadrature|", 1e-6);
  for (double alpha : o.alphas) {
    for (int D : o.dims) {
      const PhysicalParams p = params_for(o, alpha, D);
      for (int l = 0; l <= std::max(3, o.l_max); ++l) {
        if (!(epsilon_tilde(p, {0, l}) > 0.0)) {
          rec.skip();
          continue;
        }
        const double closed = quantum_correction(p, l, Method::closed);
        const double quad = quantum_correction(p, l, Method::quadrature);
        rec.record(std::abs(closed - quad), tag(alpha, D, 0, l));
      }
    }
  }
  return rec.take();
}

SuiteResult suite_momentum(const VerifyOptions& o) {
  Recorder rec("momentum", "max relative |closed - quadrature| of the action integral", 1e-8);
  for_each_bound(o, [&](const PhysicalParams& p, int n, int l) {
    const double E = energy_formula(p, {n, l});
    const double closed = momentum_integral(p, l, E, Method::closed);
    const double quad = momentum_integral(p, l, E, Method::quadrature);
    rec.record(rel(quad, closed), tag(p.alpha, p.D, n, l));
  });
  return rec.take();
}

SuiteResult suite_quantization(const VerifyOptions& o) {
  Recorder rec("quantization", "max relative |E_root - E_closed|; quantum-condition residual", 1e-10);
  for_each_bound(o, [&](const PhysicalParams& p, int n, int l) {
    PhysicalParams closed_p = p;
    closed_p.c0 *= o.c0_perturbation;
    const double closed = energy_formula(closed_p, {n, l});
    const double root = solve_quantization(p, {n, l});
    rec.record(rel(root, closed), tag(p.alpha, p.D, n, l));
    // ε̃ + ν − √(ε̃² + 2κ) = −n
    const double eps = epsilon_tilde(p, {n, l});
    const double nu = l + 0.5 * (p.D - 1);
    const double condition = eps + nu - std::sqrt(eps * eps + 2.0 * p.coupling()) + n;
    rec.record(std::abs(condition), tag(p.alpha, p.D, n, l) + " (quantum condition)", 1e-12);
  });
  return rec.take();
}

SuiteResult suite_appendix(const VerifyOptions& o) {
  Recorder rec("appendix", "max relative |closed - quadrature| over randomized turning points", 1e-8);
  std::mt19937_64 rng(o.seed + 1);
  std::uniform_real_distribution<double> radius(1e-3, 100.0);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (AppendixId id : {AppendixId::A1, AppendixId::A2, AppendixId::A3, AppendixId::A4, AppendixId::A5}) {
    for (int trial = 0; trial < 100; ++trial) {
      double rA = radius(rng);
      double rB = radius(rng);
      if (rA > rB) std::swap(rA, rB);
      if (rA == rB) rB = rA * (1.0 + 1e-3);
      double a = 0.0, b = 0.0;
      if (id == AppendixId::A5) {
        b = coeff(rng);
        // keep a + b r > 0 on [rA, rB]
        a = std::abs(coeff(rng)) + std::max(0.0, -b * rB) + 1e-3;
      }
      const double closed = appendix_integral(id, rA, rB, a, b);
      const double quad = appendix_quadrature(id, rA, rB, a, b);
      std::ostringstream where;
      where << to_string(id) << " rA=" << rA << " rB=" << rB;
      rec.record(rel(quad, closed), where.str());
    }
  }
  return rec.take();
}

SuiteResult suite_normalization(const VerifyOptions& o) {
  Recorder rec("normalization", "max relative |N_closed - N_numeric|", 1e-8);
  {
    const PhysicalParams anchor = PhysicalParams::paper_units(0.2, 3, o.c0);
    rec.record(rel(normalization_closed(anchor, {0, 0}), std::sqrt(12.0)), "anchor sqrt(12)");
  }
  for (double alpha : o.alphas) {
    for (int D : o.dims) {
      const PhysicalParams p = params_for(o, alpha, D);
      for (int l = 0; l <= o.l_max; ++l) {
        for (int n = 0; n <= 5; ++n) {
          if (!(epsilon_tilde(p, {n, l}) > 0.0)) continue;
          rec.record(rel(normalization_closed(p, {n, l}), normalization_numeric(p, {n, l})),
                     tag(alpha, D, n, l));
        }
      }
    }
  }
  return rec.take();
}

SuiteResult suite_nodes(const VerifyOptions& o) {
  Recorder rec("nodes", "max |node count - n|", 0.0);
  for_each_bound(o, [&](const PhysicalParams& p, int n, int l) {
    rec.record(std::abs(count_nodes(p, {n, l}).count - n), tag(p.alpha, p.D, n, l));
  });
  return rec.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"vieta",    "riccati",      "jacobi",
                                                 "qcorr",    "momentum",     "quantization",
                                                 "appendix", "normalization", "nodes"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "vieta") return suite_vieta(options);
  if (name == "riccati") return suite_riccati(options);
  if (name == "jacobi") return suite_jacobi(options);
  if (name == "qcorr") return suite_qcorr(options);
  if (name == "momentum") return suite_momentum(options);
  if (name == "quantization") return suite_quantization(options);
  if (name == "appendix") return suite_appendix(options);
  if (name == "normalization") return suite_normalization(options);
  if (name == "nodes") return suite_nodes(options);
  throw InvalidParams("unknown verification suite '" + name + "'");
}

}  // namespace hulthen

#include <doctest.h>

#include <cmath>
#include <random>

#include "hulthen/model.hpp"

using namespace hulthen;

TEST_CASE("paper units fix the coupling and energy scale") {
  const auto p = PhysicalParams::paper_units(0.1, 3);
  CHECK(p.hbar == 1.0);
  CHECK(p.mu == 0.5);
  CHECK(p.e2 == 1.0);
  CHECK(p.coupling() == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(p.energy_unit() == doctest::Approx(0.01).epsilon(1e-15));
}

TEST_CASE("derived quantities for D=3, l=1") {
  const auto p = PhysicalParams::paper_units(0.1, 3);
  const auto dp = derive_params(p, {0, 1});
  CHECK(dp.nu == 2.0);
  CHECK(dp.lambda2 == 2.0);
  CHECK(dp.L2 == 2.0);
  CHECK(dp.Lambda == 3.0);
  CHECK(dp.a == doctest::Approx(0.1));
  CHECK(dp.b == doctest::Approx(0.02));
  CHECK(dp.lambda_dimless == doctest::Approx(std::sqrt(2.0)));
  CHECK(dp.within_validity);
}

TEST_CASE("D=2, l=0 sits outside the validity range") {
  const auto dp = derive_params(PhysicalParams::paper_units(0.1, 2), {0, 0});
  CHECK(dp.nu == 0.5);
  CHECK(dp.lambda2 < 0.0);
  CHECK(std::isnan(dp.lambda_dimless));
  CHECK_FALSE(dp.within_validity);
}

TEST_CASE("nu recovered from L2") {
  for (int D = 3; D <= 6; ++D) {
    for (int l = 0; l <= 3; ++l) {
      PhysicalParams p;
      p.mu = 1.3;
      p.hbar = 0.7;
      p.D = D;
      const auto dp = derive_params(p, {0, l});
      CHECK(nu_from_L2(p, dp) == doctest::Approx(dp.nu).epsilon(1e-14));
    }
  }
}

TEST_CASE("validation rejects bad parameters") {
  auto p = PhysicalParams::paper_units(0.1, 3);
  CHECK_NOTHROW(p.validate());
  p.alpha = 0.0;
  CHECK_THROWS_AS(p.validate(), InvalidParams);
  p.alpha = -1.0;
  CHECK_THROWS_AS(p.validate(), InvalidParams);
  p = PhysicalParams::paper_units(0.1, 1);
  CHECK_THROWS_AS(p.validate(), InvalidParams);
  p = PhysicalParams::paper_units(0.1, 3, -0.1);
  CHECK_THROWS_AS(p.validate(), InvalidParams);
  p = PhysicalParams::paper_units(NAN, 3);
  CHECK_THROWS_AS(p.validate(), InvalidParams);
  CHECK_THROWS_AS((QuantumNumbers{-1, 0}.validate()), InvalidParams);
  CHECK_THROWS_AS((QuantumNumbers{0, -2}.validate()), InvalidParams);
}

TEST_CASE("screening factor and Hulthen potential") {
  CHECK(screening_factor(0.1, 1.0) == doctest::Approx(1.0 / std::expm1(0.1)));
  CHECK_THROWS_AS(screening_factor(0.1, 0.0), DomainError);
  CHECK_THROWS_AS(screening_factor(0.1, -1.0), DomainError);
  const auto p = PhysicalParams::paper_units(0.2, 3);
  const double r = 3.0;
  CHECK(hulthen_V(p, r) ==
        doctest::Approx(-0.2 * std::exp(-0.2 * r) / (1.0 - std::exp(-0.2 * r))).epsilon(1e-14));
  // Coulomb behaviour at small r.
  CHECK(hulthen_V(p, 1e-6) == doctest::Approx(-1e6).epsilon(1e-6));
}

TEST_CASE("centrifugal approximation tends to 1/r^2 at small r") {
  for (double alpha : {0.05, 0.1, 0.5}) {
    const double r = 1e-4 / alpha;
    CHECK(centrifugal_approx(alpha, 1.0 / 12.0, r) * r * r == doctest::Approx(1.0).epsilon(1e-6));
  }
  // Laurent expansion: α²/(4 sinh²(αr/2)) = 1/r² − α²/12 + O(r²).
  const double alpha = 0.1, r = 0.01;
  CHECK(centrifugal_approx(alpha, 0.0, r) - 1.0 / (r * r) ==
        doctest::Approx(-alpha * alpha / 12.0).epsilon(1e-5));
  CHECK(centrifugal_approx(alpha, 1.0 / 12.0, r) - 1.0 / (r * r) ==
        doctest::Approx(0.0).epsilon(1e-9).scale(1.0));
}

TEST_CASE("effective potential modes") {
  const auto p = PhysicalParams::paper_units(0.1, 3);
  const double r = 2.5;
  const double strength = centrifugal_strength(p, {0, 1});
  CHECK(strength == doctest::Approx(2.0));  // (Λ²−1)/4 with Λ=3
  CHECK(effective_V(p, {0, 1}, r, CentrifugalMode::exact) ==
        doctest::Approx(hulthen_V(p, r) + strength / (r * r)));
  CHECK(effective_V(p, {0, 1}, r, CentrifugalMode::approx) ==
        doctest::Approx(hulthen_V(p, r) + strength * centrifugal_approx(0.1, p.c0, r)));
  // l = 0 in D = 3 carries no barrier in either mode.
  CHECK(effective_V(p, {0, 0}, r, CentrifugalMode::approx) == doctest::Approx(hulthen_V(p, r)));
}

TEST_CASE("epsilon tilde sign decides binding") {
  const auto p = PhysicalParams::paper_units(0.1, 3);
  CHECK(epsilon_tilde(p, {0, 0}) == doctest::Approx(4.5));
  CHECK(epsilon_tilde(p, {2, 0}) == doctest::Approx(1.0 / 6.0));
  CHECK(epsilon_tilde(p, {3, 0}) < 0.0);
}

TEST_CASE("property: effective potential scales with units consistently") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    PhysicalParams p;
    p.alpha = 0.1 * u(rng);
    p.mu = 0.5 * u(rng);
    p.hbar = u(rng);
    p.D = 3 + trial % 3;
    const auto dp = derive_params(p, {0, trial % 3});
    // b = α²L² and L² = (ħ²/2μ)λ².
    CHECK(dp.b == doctest::Approx(p.alpha * p.alpha * p.hbar * p.hbar / (2 * p.mu) * dp.lambda2));
  }
}

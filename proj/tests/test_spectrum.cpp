#include <doctest.h>

#include <cmath>

#include "hulthen/spectrum.hpp"

using namespace hulthen;

namespace {

// −(α²)[(κ/N − N/2)² − λ²c₀] in paper units, from the bound-state condition
// written out by hand.
double hand_energy(double alpha, int n, int l, int D, double c0) {
  const double kappa = 1.0 / (2.0 * alpha);
  const double N = n + l + 0.5 * (D - 1);
  const double lambda2 = (l + 0.5 * (D - 1)) * (l + 0.5 * (D - 3));
  const double eps = kappa / N - N / 2.0;
  return alpha * alpha * (lambda2 * c0 - eps * eps);
}

}  // namespace

TEST_CASE("anchor energies") {
  CHECK(energy_level(PhysicalParams::paper_units(0.2, 3), {0, 0}).energy ==
        doctest::Approx(-0.16).epsilon(1e-13));
  CHECK(energy_level(PhysicalParams::paper_units(0.1, 3), {0, 1}).energy ==
        doctest::Approx(-1.0 / 48.0).epsilon(1e-13));
}

TEST_CASE("closed form equals the hand formula across a grid") {
  for (double alpha : {0.025, 0.05, 0.1}) {
    for (int D = 2; D <= 6; ++D) {
      for (int l = 0; l <= 3; ++l) {
        for (int n = 0; n <= 4; ++n) {
          for (double c0 : {0.0, 1.0 / 12.0, 0.3}) {
            const auto p = PhysicalParams::paper_units(alpha, D, c0);
            CHECK(energy_formula(p, {n, l}) ==
                  doctest::Approx(hand_energy(alpha, n, l, D, c0)).epsilon(1e-12));
          }
        }
      }
    }
  }
}

TEST_CASE("evaluate_level flags unbound states, energy_level throws") {
  const auto p = PhysicalParams::paper_units(2.0, 3);
  const auto level = evaluate_level(p, {0, 0});
  CHECK_FALSE(level.bound);
  CHECK_THROWS_AS(energy_level(p, {0, 0}), NotBound);
  CHECK(evaluate_level(PhysicalParams::paper_units(0.1, 3, 0.0), {0, 1}).mode ==
        ApproxMode::c0_zero);
  CHECK(evaluate_level(PhysicalParams::paper_units(0.1, 3), {0, 1}).mode ==
        ApproxMode::c0_improved);
  CHECK_FALSE(evaluate_level(PhysicalParams::paper_units(0.1, 2), {0, 0}).within_validity);
}

TEST_CASE("c0 only moves l >= 1 levels in D = 3") {
  for (int n = 0; n <= 2; ++n) {
    CHECK(energy_formula(PhysicalParams::paper_units(0.1, 3, 0.0), {n, 0}) ==
          energy_formula(PhysicalParams::paper_units(0.1, 3), {n, 0}));
    CHECK(energy_formula(PhysicalParams::paper_units(0.1, 3, 0.0), {n, 1}) !=
          energy_formula(PhysicalParams::paper_units(0.1, 3), {n, 1}));
  }
}

TEST_CASE("critical screening") {
  const auto p = PhysicalParams::paper_units(0.1, 5);
  CHECK(critical_alpha(p, {0, 0}) == doctest::Approx(0.25).epsilon(1e-15));
  for (int D = 3; D <= 5; ++D) {
    for (int l = 0; l <= 2; ++l) {
      for (int n = 0; n <= 3; ++n) {
        const double ac = critical_alpha(PhysicalParams::paper_units(0.1, D), {n, l});
        const auto at = PhysicalParams::paper_units(ac, D, 0.0);
        CHECK(std::abs(energy_formula(at, {n, l})) < 1e-12);
        CHECK(std::abs(epsilon_tilde(at, {n, l})) < 1e-12);
      }
    }
  }
}

TEST_CASE("bound state counting") {
  CHECK(count_bound_states(PhysicalParams::paper_units(2.0, 3), 0) == 0);
  CHECK(count_bound_states(PhysicalParams::paper_units(0.1, 3), 0) == 3);
  CHECK(count_bound_states(PhysicalParams::paper_units(0.1, 3), 1) == 2);
  CHECK_THROWS_AS(count_bound_states(PhysicalParams::paper_units(0.1, 3), -1), InvalidParams);
  for (double alpha : {0.01, 0.03, 0.07, 0.2}) {
    for (int l = 0; l <= 3; ++l) {
      const auto p = PhysicalParams::paper_units(alpha, 3);
      const int count = count_bound_states(p, l);
      if (count > 0) CHECK(evaluate_level(p, {count - 1, l}).bound);
      CHECK_FALSE(evaluate_level(p, {count, l}).bound);
    }
  }
}

TEST_CASE("Coulomb limit") {
  for (int n = 0; n <= 2; ++n) {
    const auto p = PhysicalParams::paper_units(1e-4, 3);
    const double ec = coulomb_energy(p, {n, 0});
    CHECK(ec == doctest::Approx(-0.25 / ((n + 1.0) * (n + 1.0))));
    // First-order screening shift is +Ze²α/2 = α/2 in paper units.
    CHECK((energy_formula(p, {n, 0}) - ec) / 1e-4 == doctest::Approx(0.5).epsilon(1e-3));
  }
}

TEST_CASE("interdimensional degeneracy") {
  const auto partner = degeneracy_partner({0, 1}, 3, -1);
  CHECK(partner.q.l == 0);
  CHECK(partner.D == 5);
  CHECK_THROWS_AS(degeneracy_partner({0, 0}, 3, -1), OutOfRange);
  CHECK_THROWS_AS(degeneracy_partner({0, 0}, 3, 1), OutOfRange);
  CHECK_THROWS_AS(degeneracy_partner({0, 0}, 3, 2), InvalidParams);
  for (double alpha : {0.025, 0.1}) {
    for (int D = 4; D <= 8; ++D) {
      for (int l = 0; l <= 3; ++l) {
        for (int n = 0; n <= 3; ++n) {
          const auto other = degeneracy_partner({n, l}, D, 1);
          CHECK(energy_formula(PhysicalParams::paper_units(alpha, D), {n, l}) ==
                energy_formula(PhysicalParams::paper_units(alpha, other.D), other.q));
        }
      }
    }
  }
}

TEST_CASE("mode names") {
  CHECK(std::string(to_string(ApproxMode::c0_zero)) != std::string(to_string(ApproxMode::c0_improved)));
}

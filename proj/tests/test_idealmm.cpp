#include <doctest.h>

#include <cmath>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/idealmm.hpp"

using namespace casimir;
using namespace casimir::idealmm;

TEST_CASE("effective distance") {
  CHECK(effective_distance({0.0, 1.0, 1.0}) == 1.0);
  CHECK(effective_distance({0.0, 1.0, 2.0}) == 0.0);
  CHECK(effective_distance({0.0, 1.0, 3.0}) == -1.0);
  CHECK_THROWS_AS(effective_distance({1.0, 0.0, 3.0}), Error);
  CHECK_THROWS_AS(effective_distance({0.0, 1.0, 3.0, 0.0}), Error);
}

TEST_CASE("closed-form force and energy") {
  const double d = 1e-7, A = 2e-4;
  const double c = kHbar * kSpeedOfLight * kPi * kPi;
  const auto exact = [](double v) { return doctest::Approx(v).epsilon(1e-15); };
  CHECK(ideal_mm_force(d, A) == exact(-A * c / (240.0 * d * d * d * d)));
  CHECK(ideal_mm_force(-d, A) == exact(A * c / (240.0 * d * d * d * d)));
  CHECK(ideal_mm_energy(d, A) == exact(-A * c / (720.0 * d * d * d)));
  CHECK(ideal_mm_energy(-d, A) == exact(A * c / (720.0 * d * d * d)));
  for (double a : {1e-8, 3e-7, 2e-6}) {
    CHECK(ideal_mm_force(-a, A) == -ideal_mm_force(a, A));
    CHECK(ideal_mm_energy(-a, A) == -ideal_mm_energy(a, A));
  }
  try {
    ideal_mm_force(0.0, A);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Divergence);
  }
  CHECK_THROWS_AS(ideal_mm_energy(0.0, A), Error);
}

TEST_CASE("energy and force agree by finite differences") {
  for (double d : {1e-8, 1e-7, 1e-6}) {
    const double h = d * 1e-5;
    const double dE = (ideal_mm_energy(d + h, 1.0) - ideal_mm_energy(d - h, 1.0)) / (2.0 * h);
    CHECK(std::abs(std::abs(dE) / std::abs(ideal_mm_force(d, 1.0)) - 1.0) < 1e-8);
  }
}

TEST_CASE("phase shift") {
  const double k = 1e7;
  for (auto pol : kPolarizations) {
    CHECK(phase_shift(k, k, 1.0, 1e-7, pol) == 0.0);
    CHECK(phase_shift(k, 2.0 * k, 3.0, 0.0, pol) == 0.0);
    for (double a : {1e-8, 1.3e-7, 4e-6}) {
      const double p = phase_shift(k, 2.7 * k, 2.0, a, pol);
      CHECK(phase_shift(k, 2.7 * k, 2.0, -a, pol) == -p);
      CHECK(std::abs(p) < kPi / 2.0);
    }
  }
  CHECK(interface_amplitude(1.0, 3.0, 1.0, Polarization::TE) == 0.5);
  CHECK(interface_amplitude(1.0, 1.0, 3.0, Polarization::TM) == 0.5);
  try {
    phase_shift_from_amplitude(1.0, k, 0.0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularPhase);
  }
}

TEST_CASE("unwrapped phase curve is continuous") {
  std::vector<double> k2;
  for (int i = 1; i <= 4000; ++i) k2.push_back(1e5 * i);
  const auto curve = phase_shift_curve(0.999, k2, 1e-5);
  for (std::size_t i = 1; i < curve.size(); ++i) {
    CHECK(std::abs(curve[i] - curve[i - 1]) < kPi / 2.0);
  }
  const auto neg = phase_shift_curve(0.999, k2, -1e-5);
  for (std::size_t i = 0; i < curve.size(); ++i) CHECK(neg[i] == -curve[i]);
}

TEST_CASE("phase integral recovers the perfect-metal energy") {
  const double a = 1e-7;
  const double closed = ideal_mm_energy(a, 1.0);
  const double numeric = phase_integral_energy(1.0, a);
  CHECK(std::abs(numeric / closed - 1.0) < 0.01);
  CHECK(phase_integral_energy(1.0, -a) == -numeric);
  CHECK(std::abs(phase_integral_energy(0.5, a)) < std::abs(numeric));
}

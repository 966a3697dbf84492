#include <doctest.h>

#include <cmath>

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "fixtures.hpp"
#include "oracle_values.hpp"

using namespace casimir;
using namespace casimir::asymptotics;

TEST_CASE("coefficient table") {
  CHECK(kGk.size() == 4);
  for (std::size_t i = 1; i < kGk.size(); ++i) CHECK(kGk[i] < kGk[i - 1]);
}

TEST_CASE("short-distance Drude formula") {
  // omega = 1 rad/s and L = 1 m; dividing by hbar gives the reduced value.
  const auto e = short_drude(1.0, 1.0, 1.0);
  CHECK(e.value / kHbar == doctest::Approx(oracle::kShortDrudeReduced).epsilon(1e-14));
  CHECK_FALSE(e.truncated);

  const double L = 1e-9;
  const auto e1 = short_drude(1e15, 2e15, L);
  const auto e2 = short_drude(1e15, 2e15, 2.0 * L);
  CHECK(e1.value / e2.value == doctest::Approx(8.0).epsilon(1e-12));

  // Very different plasma frequencies: the series is cut short.
  CHECK(short_drude(1e14, 1e16, 1e-9).truncated);
  CHECK(short_drude(1e15, 1e15, 1e-3).outside_validity);
  CHECK_THROWS_AS(short_drude(2.0, 1.0, 1.0), Error);
}

TEST_CASE("long-distance non-magnetic expansion") {
  CHECK(long_nonmagnetic(0.0, 0.0, 1.0).value == 1.0);
  CHECK(long_nonmagnetic(1.0, 1.0, 100.0).value ==
        doctest::Approx(oracle::kLongNonmagnetic100).epsilon(1e-15));
  CHECK(long_nonmagnetic(1.0, 1.0, 200.0).value > long_nonmagnetic(1.0, 1.0, 100.0).value);
  CHECK(long_nonmagnetic(1.0, 1.0, 10.0).outside_validity);
  CHECK_THROWS_AS(long_nonmagnetic(1.0, 1.0, 1.5), Error);
}

TEST_CASE("dielectric-magnetic plasma limit") {
  const double w = 1e15, L = 1e-9;
  const auto e = short_dielectric_magnetic(w, w, L);
  CHECK(e.value == doctest::Approx(std::sqrt(2.0) / 32.0 * kHbar * w * w * w /
                                   (kPi * kSpeedOfLight * kSpeedOfLight * L))
                       .epsilon(1e-14));
  CHECK(e.value > 0.0);
  CHECK(short_dielectric_magnetic(w, 0.0, L).value == 0.0);
  CHECK(short_dielectric_magnetic(w, 2.0 * w, L).value /
            short_dielectric_magnetic(w, 2.0 * w, 2.0 * L).value ==
        doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("Boyer expansion") {
  CHECK(long_boyer(0.0, 0.0, 1.0).value == -0.875);
  CHECK(long_boyer(1.0, 1.0, 1000.0).value ==
        doctest::Approx(oracle::kLongBoyer1000).epsilon(1e-15));
  CHECK(long_boyer(1.0, 1.0, 2000.0).value < long_boyer(1.0, 1.0, 1000.0).value);
}

TEST_CASE("Lorentz short-distance limit") {
  const auto a = short_lorentz(1e15, 2e15, 0.0, 1e-9);
  const auto b = short_drude(1e15, 2e15, 1e-9);
  CHECK(a.value == b.value);
  CHECK(short_lorentz(1e15, 1e15, 0.0, 1e-9).value == short_drude(1e15, 1e15, 1e-9).value);
  try {
    short_lorentz(1e15, 2e15, 1e14, 1e-9);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }
}

TEST_CASE("integrator against the limits") {
  const double lambda = 1e-6;
  const double w = 2.0 * kPi * kSpeedOfLight / lambda;

  SUBCASE("non-magnetic pair at long distance") {
    const double L = 100.0 * lambda;
    const auto r = casimir_force(fixtures::plasma_dielectric(w),
                                 fixtures::plasma_dielectric(w), L);
    CHECK(std::abs(r.eta / long_nonmagnetic(lambda, lambda, L).value - 1.0) < 0.01);
  }
  SUBCASE("Boyer limit") {
    const auto a = fixtures::plasma_dielectric(w);
    const auto b = fixtures::plasma_magnetic(w);
    const auto r100 = casimir_force(a, b, 100.0 * lambda);
    CHECK(std::abs(r100.eta / -0.875 - 1.0) < 0.02);
    CHECK(std::abs(r100.eta / long_boyer(lambda, lambda, 100.0 * lambda).value - 1.0) < 0.02);
  }
  SUBCASE("short-distance Drude match degrades with distance") {
    const auto m = fixtures::drude_mirror(w, 1e-4 * w);
    double prev = 0.0;
    for (double f : {1.0 / 200.0, 1.0 / 20.0, 1.0 / 5.0, 1.0 / 2.0}) {
      const double L = f * lambda;
      const double dev = std::abs(casimir_force(m, m, L).total / short_drude(w, w, L).value - 1.0);
      CHECK(dev > prev);
      prev = dev;
    }
  }
}

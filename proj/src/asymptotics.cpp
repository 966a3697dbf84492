#include "casimir/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/materials.hpp"

namespace casimir::asymptotics {

namespace {

constexpr double kShortFraction = 1.0 / 100.0;
constexpr double kLongMultiple = 20.0;

void require_distance(double distance) {
  require(std::isfinite(distance) && distance > 0.0,
          "distance must be finite and > 0");
}

}  // namespace

Estimate short_drude(double omega_eA, double omega_eB, double distance) {
  require_distance(distance);
  require(omega_eA > 0.0 && omega_eB > 0.0, "plasma frequencies must be > 0");
  require(omega_eA <= omega_eB, "short_drude needs omega_eA <= omega_eB");

  const double x = 1.0 - (omega_eA * omega_eA) / (omega_eB * omega_eB);
  double sum = 0.0;
  double power = 1.0;
  double last = 0.0;
  for (double g : kGk) {
    last = g * power;
    sum += last;
    power *= x;
  }
  Estimate e;
  e.value = -(std::numbers::sqrt2 / 32.0) * kHbar * omega_eA * sum /
            (kPi * kPi * distance * distance * distance);
  e.truncated = std::abs(last) > 1e-3 * std::abs(sum);
  e.outside_validity = distance >= kShortFraction * plasma_wavelength(omega_eB);
  return e;
}

Estimate long_nonmagnetic(double lambda_eA, double lambda_eB, double distance) {
  require_distance(distance);
  require(lambda_eA >= 0.0 && lambda_eB >= 0.0, "wavelengths must be >= 0");
  require(distance > lambda_eA + lambda_eB,
          "long-distance expansion needs L > lambda_eA + lambda_eB");
  Estimate e;
  e.value = 1.0 - 4.0 * (lambda_eA + lambda_eB) / (3.0 * kPi * distance);
  e.outside_validity = distance <= kLongMultiple * std::max(lambda_eA, lambda_eB);
  return e;
}

Estimate short_dielectric_magnetic(double omega_eA, double omega_mB,
                                   double distance) {
  require_distance(distance);
  require(omega_eA >= 0.0 && omega_mB >= 0.0, "frequencies must be >= 0");
  Estimate e;
  e.value = (std::numbers::sqrt2 / 64.0) * kHbar /
            (kPi * kSpeedOfLight * kSpeedOfLight) *
            (omega_eA * omega_eA * omega_mB + omega_mB * omega_mB * omega_eA) /
            distance;
  const double fastest = std::max(omega_eA, omega_mB);
  e.outside_validity =
      fastest > 0.0 && distance >= kShortFraction * plasma_wavelength(fastest);
  return e;
}

Estimate long_boyer(double lambda_eA, double lambda_mB, double distance) {
  require_distance(distance);
  require(lambda_eA >= 0.0 && lambda_mB >= 0.0, "wavelengths must be >= 0");
  require(distance > lambda_eA + lambda_mB,
          "long-distance expansion needs L > lambda_eA + lambda_mB");
  Estimate e;
  e.value = -7.0 / 8.0 + 7.0 * (lambda_eA + lambda_mB) / (6.0 * kPi * distance);
  e.outside_validity = distance <= kLongMultiple * std::max(lambda_eA, lambda_mB);
  return e;
}

Estimate short_lorentz(double omega_eA, double omega_eB, double omega_0,
                       double distance) {
  require(omega_0 >= 0.0, "resonance must be >= 0");
  if (omega_0 > 0.0) {
    fail(ErrorKind::Unsupported,
         "unsupported: general Lorentz G_k unknown for omega_0 > 0");
  }
  return short_drude(omega_eA, omega_eB, distance);
}

}  // namespace casimir::asymptotics

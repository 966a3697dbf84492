#pragma once

// Closed-form short- and long-distance limits of the force, used as
// independent checks on the integrator.

#include <array>

namespace casimir::asymptotics {

/// Drude-limit series coefficients G_0..G_3.
inline constexpr std::array<double, 4> kGk = {1.744, 0.436, 0.215, 0.133};

/// A limit value together with its validity diagnostics.
struct Estimate {
  double value = 0.0;
  /// Last retained series term exceeds 1e-3 of the sum.
  bool truncated = false;
  /// The distance lies outside the nominal regime (short: L >= lambda/100,
  /// long: L <= 20 lambda).
  bool outside_validity = false;
};

/// Two Drude/plasma mirrors at L << lambda; omega_eA <= omega_eB. Pa.
Estimate short_drude(double omega_eA, double omega_eB, double distance);

/// Reduction factor 1 - 4 (lambda_eA + lambda_eB) / (3 pi L).
Estimate long_nonmagnetic(double lambda_eA, double lambda_eB, double distance);

/// Plasma dielectric A against plasma magnetic B at short distance; always
/// repulsive and scaling as 1/L. Pa.
Estimate short_dielectric_magnetic(double omega_eA, double omega_mB,
                                   double distance);

/// Reduction factor -7/8 + 7 (lambda_eA + lambda_mB) / (6 pi L). The second
/// wavelength belongs to the magnetic plasma frequency of mirror B.
Estimate long_boyer(double lambda_eA, double lambda_mB, double distance);

/// Lorentz mirrors with common resonance omega_0. Only omega_0 = 0 is
/// available (it reduces to short_drude); otherwise throws Unsupported.
Estimate short_lorentz(double omega_eA, double omega_eB, double omega_0,
                       double distance);

}  // namespace casimir::asymptotics

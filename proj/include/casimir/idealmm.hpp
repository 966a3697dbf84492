#pragma once

// Ideal perfect-matching metamaterial (eps = mu = n = -1) between two mirrors:
// effective distance, scattering phase shift and closed-form Casimir energy and
// force for perfect metal mirrors.
//
// Geometry: interfaces at L1 <= L2 <= L3 with the metamaterial coating
// occupying [L2, L3]. Only the effective distance a' = 2 L2 - L1 - L3 enters;
// a' < 0 turns attraction into repulsion.

#include <span>
#include <vector>

#include "casimir/reflection.hpp"

namespace casimir::idealmm {

struct EffectiveGeometry {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
  double area = 1.0;  // m^2

  void validate() const;
};

double effective_distance(const EffectiveGeometry& geom);

/// Reflection amplitude at the interface entering the gap, for real wave
/// numbers k1, k2 > 0: TM (k2 eps1 - k1)/(k2 eps1 + k1), TE (k2 - k1)/(k2 + k1).
double interface_amplitude(double k1, double k2, double eps1, Polarization pol);

/// delta = (1/2i) ln[(1 - r^2 e^{-2 i k2 |a'|}) / (1 - r^2 e^{2 i k2 |a'|})],
/// odd in a'. Principal branch, in (-pi/2, pi/2) whenever r^2 < 1.
double phase_shift(double k1, double k2, double eps1, double a_prime,
                   Polarization pol);

/// Same phase for a given amplitude r (|r| <= 1). Throws SingularPhase on the
/// pole r^2 e^{2 i k2 |a'|} = 1.
double phase_shift_from_amplitude(double r, double k2, double a_prime);

/// Phase along increasing k2 samples, unwrapped: jumps larger than pi/2
/// between neighbours are removed in multiples of pi.
std::vector<double> phase_shift_curve(double r, std::span<const double> k2,
                                      double a_prime);

/// -A hbar c pi^2 / (240 a'^4) for a' > 0, the opposite sign for a' < 0.
/// Throws Divergence at a' = 0. Newtons.
double ideal_mm_force(double a_prime, double area);

/// -A hbar c pi^2 / (720 |a'|^3) for a' > 0, the opposite sign for a' < 0.
/// Joules.
double ideal_mm_energy(double a_prime, double area);

/// Energy per unit area from the phase-shift representation with constant
/// interface amplitude r (both polarizations), with the wave-number integral
/// rotated onto the imaginary axis:
///   E/A = (hbar / 2 pi) sum_p int d^2k/(2 pi)^2 int_0^inf dxi
///         ln(1 - r^2 exp(-2 kappa |a'|)),  kappa^2 = k^2 + xi^2 / c^2.
/// Evaluated by a tensor Gauss-Legendre rule on the truncated square
/// [0, cutoff]^2 in (k |a'|, xi |a'| / c) with `panels_per_unit` panels per
/// unit length; odd in a'. J / m^2.
double phase_integral_energy(double r, double a_prime, int panels_per_unit = 4,
                             double cutoff = 20.0);

}  // namespace casimir::idealmm

#pragma once

// Mirror configurations shared by the unit tests, the acceptance runner and
// the benchmark. Frequencies are built from a reference length so that the
// physics only depends on dimensionless ratios.

#include "casimir/constants.hpp"
#include "casimir/materials.hpp"
#include "casimir/reflection.hpp"

namespace fixtures {

using namespace casimir;

inline constexpr double kLref = 1e-6;  // m

/// c / L_ref in rad/s.
inline double unit_frequency(double l_ref = kLref) { return kSpeedOfLight / l_ref; }

inline Mirror drude_mirror(double plasma, double damping) {
  return Mirror::bare({ResponseModel::drude(plasma, damping), ResponseModel::vacuum()});
}

inline Mirror plasma_dielectric(double omega) {
  return Mirror::bare({ResponseModel::plasma(omega), ResponseModel::vacuum()});
}

inline Mirror plasma_magnetic(double omega) {
  return Mirror::bare({ResponseModel::vacuum(), ResponseModel::plasma(omega)});
}

/// Drude mirror A of the mainly-magnetic example: plasma 10, damping 0.01 c/L.
inline Mirror mainly_magnetic_a(double l_ref = kLref) {
  const double w = unit_frequency(l_ref);
  return drude_mirror(10.0 * w, 0.01 * w);
}

/// Lorentz mirror B: omega_e = gamma_e = gamma_m = 1, omega_0 = 0.1 and the
/// magnetic strength omega_m, all in units of c/L.
inline Mirror mainly_magnetic_b(double omega_m = 3.0, double l_ref = kLref) {
  const double w = unit_frequency(l_ref);
  return Mirror::bare({ResponseModel::lorentz(w, 0.1 * w, w),
                       ResponseModel::lorentz(omega_m * w, 0.1 * w, w)});
}

/// Reference wavelength 2 pi c / (c / L_ref) used to express the window
/// search range of the mainly-magnetic example.
inline double mainly_magnetic_lambda(double l_ref = kLref) {
  return 2.0 * kPi * l_ref;
}

/// Coated example: Drude mirror A and substrate (plasma 10 omega_0, damping
/// 0.01 omega_0), coating with omega_e = 2, omega_m = 3 omega_0 at resonance
/// omega_0, all dampings 0.01 omega_0.
inline Mirror coated_a(double omega0) { return drude_mirror(10.0 * omega0, 0.01 * omega0); }

inline Mirror coated_b(double omega0, double thickness) {
  const Material coating{ResponseModel::lorentz(2.0 * omega0, omega0, 0.01 * omega0),
                         ResponseModel::lorentz(3.0 * omega0, omega0, 0.01 * omega0)};
  Mirror m;
  m.coatings.push_back({coating, thickness});
  m.substrate = {ResponseModel::drude(10.0 * omega0, 0.01 * omega0), ResponseModel::vacuum()};
  return m;
}

/// omega_0 whose wavelength is 1 micron.
inline double coated_omega0() { return 2.0 * kPi * kSpeedOfLight / kLref; }

}  // namespace fixtures

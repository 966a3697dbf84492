#pragma once

// Zero-temperature Casimir force per unit area between two planar mirrors,
//
//   F(L) = -(hbar / 2 pi^2 c^3) sum_p int_0^inf dxi xi^3 int_1^inf dalpha
//          alpha^2 rA rB / (exp(2 alpha xi L / c) - rA rB),
//
// evaluated by nested adaptive Gauss-Kronrod quadrature. Negative values are
// attractive.

#include <optional>

#include "casimir/reflection.hpp"

namespace casimir {

struct QuadratureConfig {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;         // Pa
  int max_subdivisions = 2000;  // per adaptive integral
  double tail_cut = 75.0;       // largest y = 2 alpha xi L / c kept

  void validate() const;
};

/// Contributions below (F1) and above (F2) the sign-change point alpha0 of
/// the designated mirror, per polarization. Pa.
struct SplitParts {
  double f1_te = 0.0;
  double f2_te = 0.0;
  double f1_tm = 0.0;
  double f2_tm = 0.0;
};

struct ForceResult {
  double total = 0.0;  // Pa, negative = attraction
  double te = 0.0;
  double tm = 0.0;
  std::optional<SplitParts> split;
  double eta = 0.0;
  double err_est = 0.0;  // Pa

  double operator[](Polarization p) const noexcept {
    return p == Polarization::TE ? te : tm;
  }
};

enum class MirrorSide { A, B };

/// -hbar c pi^2 / (240 L^4), the force between ideal conductors.
double perfect_conductor_force(double distance);

double reduction_factor(double total, double distance);

ForceResult casimir_force(const Mirror& mirror_a, const Mirror& mirror_b,
                          double distance, const QuadratureConfig& cfg = {});

/// As casimir_force, with each inner alpha integral split at alpha0 of the
/// bare mirror `split_mirror`. An absent alpha0 puts the whole integral in F1.
ForceResult force_split(const Mirror& mirror_a, const Mirror& mirror_b,
                        double distance, MirrorSide split_mirror,
                        const QuadratureConfig& cfg = {});

}  // namespace casimir

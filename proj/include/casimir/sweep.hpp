#pragma once

// Distance sweeps of the force and repulsion-window detection.
//
// Every sweep has a serial reference kernel and an OpenMP kernel. Rows are
// independent, so both produce bitwise-identical tables in input order.

#include <optional>
#include <string>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"

namespace casimir {

struct SweepRow {
  double distance = 0.0;  // m
  double force = 0.0;     // Pa
  double eta = 0.0;
  double force_te = 0.0;
  double force_tm = 0.0;
  double err_est = 0.0;
  std::optional<std::string> error;  // quadrature failure for this row
  ErrorKind error_kind = ErrorKind::NonConvergent;

  bool ok() const noexcept { return !error.has_value(); }
};

using SweepTable = std::vector<SweepRow>;

SweepTable sweep_serial(const Mirror& mirror_a, const Mirror& mirror_b,
                        const std::vector<double>& distances,
                        const QuadratureConfig& cfg);

/// jobs <= 0 uses the OpenMP default thread count.
SweepTable sweep_parallel(const Mirror& mirror_a, const Mirror& mirror_b,
                          const std::vector<double>& distances,
                          const QuadratureConfig& cfg, int jobs = 0);

/// count log-spaced distances in [lo, hi], endpoints included.
std::vector<double> log_space(double lo, double hi, int count);

/// Sign change of the force located between `lo` and `hi`.
struct Crossing {
  double lo = 0.0;
  double hi = 0.0;
  double achieved_rel_tol = 0.0;  // (hi - lo) / lo

  double location() const noexcept { return 0.5 * (lo + hi); }
};

/// Maximal distance interval with a repulsive (positive) force.
struct RepulsionWindow {
  double l_lo = 0.0;
  double l_hi = 0.0;
  std::optional<Crossing> crossing_lo;  // absent when the window starts at l_min
  std::optional<Crossing> crossing_hi;  // absent when it runs to l_max
};

struct WindowSearch {
  int samples = 64;
  double rel_tol = 1e-6;  // bisection tolerance on L
  int jobs = 0;
};

/// Samples the force on a log grid, brackets each sign change and refines it
/// by bisection in log L. Throws the underlying error (with the offending
/// distance) if any evaluation fails.
std::vector<RepulsionWindow> find_sign_changes(const Mirror& mirror_a,
                                               const Mirror& mirror_b,
                                               double l_min, double l_max,
                                               const QuadratureConfig& cfg,
                                               const WindowSearch& search = {});

/// All sign-change locations contained in a window list.
std::vector<Crossing> crossings(const std::vector<RepulsionWindow>& windows);

}  // namespace casimir
